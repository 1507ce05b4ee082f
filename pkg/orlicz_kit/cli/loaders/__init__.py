from __future__ import annotations

from typing import Any, Optional

from ...exceptions import InvalidDescriptorError
from ...measure import SimpleFunction
from ...serialization import MeasureSerializer, YoungSerializer
from ...young import YoungFunction
from .base_input_loader import BaseInputLoader
from .csv_file_loader import CsvFileLoader
from .inline_json_loader import InlineJsonLoader
from .json_file_loader import JsonFileLoader
from .yaml_file_loader import YamlFileLoader


class InputLoaderRegistry:
    """Resolves --young/--data style inputs: inline JSON or a file."""

    def __init__(self):
        self._loaders: list[BaseInputLoader] = [
            InlineJsonLoader(),
            JsonFileLoader(),
            YamlFileLoader(),
            CsvFileLoader(),
        ]
        self._young = YoungSerializer()
        self._measure = MeasureSerializer()

    def find_loader(self, spec: str) -> Optional[BaseInputLoader]:
        for loader in self._loaders:
            if loader.can_load(spec):
                return loader
        return None

    def load(self, spec: str, field: str) -> Any:
        loader = self.find_loader(spec)
        if loader is None:
            raise InvalidDescriptorError(
                field,
                "expected inline JSON or a .json, .yaml, .yml or .csv"
                f" file, got {spec!r}",
            )
        return loader.load(spec, field)

    def load_young(self, spec: str, field: str = "young") -> YoungFunction:
        data = self.load(spec, field)
        if isinstance(data, SimpleFunction):
            raise InvalidDescriptorError(
                field, "a Young function cannot be read from CSV"
            )
        return self._young.deserialize(data)

    def load_measure(self, spec: str, field: str = "data") -> SimpleFunction:
        data = self.load(spec, field)
        if isinstance(data, SimpleFunction):
            return data
        return self._measure.deserialize(data)
