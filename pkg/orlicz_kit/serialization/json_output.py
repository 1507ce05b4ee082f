"""
Stable JSON output.

Floats are written with 17 significant digits, infinity as the string
"inf", keys in insertion order. Top-level objects carry "schema": 1.
"""

from __future__ import annotations

import json
import math
from enum import Enum
from typing import Any

from ..exceptions import InvalidDescriptorError

SCHEMA_VERSION = 1
INF_TOKEN = "inf"


def encode_extreal(value: float) -> Any:
    return INF_TOKEN if math.isinf(value) else float(value)


def decode_extreal(value: Any, field: str) -> float:
    """A JSON number or "inf" into a float in [0, inf]."""
    if isinstance(value, bool):
        raise InvalidDescriptorError(
            field, "expected a number or \"inf\""
        )
    if isinstance(value, str):
        if value.strip().lower() in (INF_TOKEN, "infinity", "∞"):
            return math.inf
        raise InvalidDescriptorError(
            field, f"expected a number or \"inf\", got {value!r}"
        )
    if not isinstance(value, (int, float)):
        raise InvalidDescriptorError(
            field, f"expected a number, got {type(value).__name__}"
        )
    number = float(value)
    if math.isnan(number) or number < 0.0:
        raise InvalidDescriptorError(
            field, f"must be a nonnegative number, got {value!r}"
        )
    return number


def decode_real(value: Any, field: str) -> float:
    """A finite JSON number."""
    number = decode_extreal(value, field)
    if math.isinf(number):
        raise InvalidDescriptorError(field, "must be finite")
    return number


def _format_float(value: float) -> str:
    if math.isnan(value):
        raise ValueError("NaN cannot be serialized")
    if math.isinf(value):
        return json.dumps(INF_TOKEN if value > 0 else "-inf")
    if value == int(value) and abs(value) < 1e17:
        return f"{value:.1f}"
    return format(value, ".17g")


def _encode(value: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    close = " " * (indent * level)

    if isinstance(value, Enum):
        value = value.value
    if value is None or isinstance(value, (bool, str)):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(k), ensure_ascii=False)}: "
            f"{_encode(v, indent, level + 1)}"
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + f"\n{close}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [
            f"{pad}{_encode(v, indent, level + 1)}"
            for v in value
        ]
        return "[\n" + ",\n".join(items) + f"\n{close}]"
    if hasattr(value, "item"):
        # numpy scalars
        return _encode(value.item(), indent, level)
    raise TypeError(
        f"cannot serialize {type(value).__name__}"
    )


def dumps_json(
    payload: dict[str, Any], indent: int = 2
) -> str:
    document = {"schema": SCHEMA_VERSION, **payload}
    return _encode(document, indent, 0) + "\n"
