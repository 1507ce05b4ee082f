from __future__ import annotations

from typing import Any

from .base_input_loader import FileInputLoader
from .inline_json_loader import parse_json


class JsonFileLoader(FileInputLoader):
    SUPPORTED_EXTENSIONS = (".json",)

    def load(self, spec: str, field: str) -> Any:
        return parse_json(self.read_text(spec, field), field)
