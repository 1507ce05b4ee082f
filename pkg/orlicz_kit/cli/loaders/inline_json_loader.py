from __future__ import annotations

import json
from typing import Any

from ...exceptions import InvalidDescriptorError
from .base_input_loader import BaseInputLoader


def parse_json(text: str, field: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidDescriptorError(
            field, f"malformed JSON: {e.msg} at line {e.lineno}"
            f" column {e.colno}"
        ) from e


class InlineJsonLoader(BaseInputLoader):
    def can_load(self, spec: str) -> bool:
        return spec.lstrip()[:1] in ("{", "[")

    def load(self, spec: str, field: str) -> Any:
        return parse_json(spec, field)
