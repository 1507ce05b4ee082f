from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

from ...exceptions import InvalidDescriptorError


class BaseInputLoader(ABC):
    """Turns one command-line input (inline text or a path) into data."""

    @abstractmethod
    def can_load(self, spec: str) -> bool: ...

    @abstractmethod
    def load(self, spec: str, field: str) -> Any: ...


class FileInputLoader(BaseInputLoader):
    SUPPORTED_EXTENSIONS: tuple[str, ...] = ()

    def can_load(self, spec: str) -> bool:
        return Path(spec).suffix.lower() in self.SUPPORTED_EXTENSIONS

    @staticmethod
    def read_text(spec: str, field: str) -> str:
        path = Path(spec)
        if not path.is_file():
            raise InvalidDescriptorError(field, f"no such file: {spec}")
        try:
            return path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise InvalidDescriptorError(
                field, f"cannot read {spec}: {e}"
            ) from e
