from __future__ import annotations

from ...measure import SimpleFunction
from ...serialization import MeasureSerializer
from .base_input_loader import FileInputLoader


class CsvFileLoader(FileInputLoader):
    """weight,value rows; yields a SimpleFunction directly."""

    SUPPORTED_EXTENSIONS = (".csv",)

    def __init__(self):
        self._serializer = MeasureSerializer()

    def load(self, spec: str, field: str) -> SimpleFunction:
        return self._serializer.from_csv(self.read_text(spec, field))
