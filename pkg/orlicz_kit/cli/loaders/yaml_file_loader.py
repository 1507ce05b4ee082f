from __future__ import annotations

from typing import Any

import yaml

from ...exceptions import InvalidDescriptorError
from .base_input_loader import FileInputLoader


def _coerce_numbers(data: Any) -> Any:
    # PyYAML leaves 1e-6 (no dot) as a string
    if isinstance(data, dict):
        return {key: _coerce_numbers(value) for key, value in data.items()}
    if isinstance(data, list):
        return [_coerce_numbers(value) for value in data]
    if isinstance(data, str):
        try:
            return float(data)
        except ValueError:
            return data
    return data


class YamlFileLoader(FileInputLoader):
    SUPPORTED_EXTENSIONS = (".yaml", ".yml")

    def load(self, spec: str, field: str) -> Any:
        text = self.read_text(spec, field)
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise InvalidDescriptorError(
                field, f"malformed YAML: {e}"
            ) from e
        return _coerce_numbers(data)
