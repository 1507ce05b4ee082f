"""
Young function descriptors as JSON-compatible dicts.

    {"family": "power", "p": 2}
    {"family": "power_log", "p": 1, "q": 2}
    {"family": "exp_power", "p": 1}
    {"family": "linf"}
    {"family": "pl", "breakpoints": [[0, 0], [1, 0]], "tail": {"slope": 1}}
    {"family": "pl", "breakpoints": [[0, 0]], "tail": {"b": 2, "phi_b": "inf"}}
    {"family": "sum", "lhs": {...}, "rhs": {...}}
    {"family": "arg_scale", "inner": {...}, "c": 0.5}

Malformed descriptors raise InvalidDescriptorError with the full path of
the offending field, e.g. "lhs.tail.b".
"""

from __future__ import annotations

from typing import Any, Callable, Optional

from ..exceptions import InvalidDescriptorError
from ..young import (
    ArgScale,
    ExpPower,
    FiniteB,
    LinfIndicator,
    PiecewiseLinear,
    Power,
    PowerLog,
    Slope,
    Sum,
    Tail,
    YoungFunction,
)
from .json_output import decode_extreal, decode_real, encode_extreal


def _join(prefix: str, field: str) -> str:
    if not prefix:
        return field
    if field.startswith("["):
        return f"{prefix}{field}"
    return f"{prefix}.{field}"


class YoungSerializer:

    def __init__(self):
        self._decoders: dict[
            str, Callable[[dict[str, Any], str], YoungFunction]
        ] = {
            Power.family: self._deserialize_power,
            PowerLog.family: self._deserialize_power_log,
            ExpPower.family: self._deserialize_exp_power,
            LinfIndicator.family: self._deserialize_linf,
            PiecewiseLinear.family: self._deserialize_pl,
            Sum.family: self._deserialize_sum,
            ArgScale.family: self._deserialize_arg_scale,
        }

    @property
    def families(self) -> list[str]:
        return sorted(self._decoders)

    # =========================================================================
    # SERIALIZE
    # =========================================================================

    def serialize(self, phi: YoungFunction) -> dict[str, Any]:
        result: dict[str, Any] = {"family": phi.family}

        if isinstance(phi, (Power, ExpPower)):
            result["p"] = phi.p
        elif isinstance(phi, PowerLog):
            result["p"] = phi.p
            result["q"] = phi.q
        elif isinstance(phi, PiecewiseLinear):
            result["breakpoints"] = [
                [t, y] for t, y in phi.breakpoints
            ]
            result["tail"] = self._serialize_tail(phi.tail)
        elif isinstance(phi, Sum):
            result["lhs"] = self.serialize(phi.lhs)
            result["rhs"] = self.serialize(phi.rhs)
        elif isinstance(phi, ArgScale):
            result["inner"] = self.serialize(phi.inner)
            result["c"] = phi.c
        elif not isinstance(phi, LinfIndicator):
            raise TypeError(
                f"cannot serialize {type(phi).__name__}"
            )

        return result

    def _serialize_tail(self, tail: Tail) -> dict[str, Any]:
        if isinstance(tail, Slope):
            return {"slope": tail.s}
        result: dict[str, Any] = {
            "b": tail.b,
            "phi_b": encode_extreal(tail.phi_b),
        }
        if tail.pole is not None:
            result["pole"] = tail.pole
        return result

    # =========================================================================
    # DESERIALIZE
    # =========================================================================

    def deserialize(
        self, data: Any, path: str = ""
    ) -> YoungFunction:
        if not isinstance(data, dict):
            raise InvalidDescriptorError(
                path or "young", "expected an object"
            )
        family = data.get("family")
        decoder = self._decoders.get(family)
        if decoder is None:
            raise InvalidDescriptorError(
                _join(path, "family"),
                f"unknown family {family!r}; "
                f"expected one of {', '.join(self.families)}",
            )
        try:
            return decoder(data, path)
        except InvalidDescriptorError as e:
            if not path or e.field.startswith(path):
                raise
            raise InvalidDescriptorError(
                _join(path, e.field),
                e.message,
            ) from e

    def _required(
        self, data: dict[str, Any], key: str, path: str
    ) -> Any:
        if key not in data:
            raise InvalidDescriptorError(
                _join(path, key), "is required"
            )
        return data[key]

    def _exponent(
        self, data: dict[str, Any], key: str, path: str
    ) -> float:
        return decode_real(
            self._required(data, key, path), _join(path, key)
        )

    def _deserialize_power(
        self, data: dict[str, Any], path: str
    ) -> YoungFunction:
        return Power(self._exponent(data, "p", path))

    def _deserialize_power_log(
        self, data: dict[str, Any], path: str
    ) -> YoungFunction:
        return PowerLog(
            self._exponent(data, "p", path),
            self._exponent(data, "q", path),
        )

    def _deserialize_exp_power(
        self, data: dict[str, Any], path: str
    ) -> YoungFunction:
        return ExpPower(self._exponent(data, "p", path))

    def _deserialize_linf(
        self, data: dict[str, Any], path: str
    ) -> YoungFunction:
        return LinfIndicator()

    def _deserialize_pl(
        self, data: dict[str, Any], path: str
    ) -> YoungFunction:
        raw = self._required(data, "breakpoints", path)
        if not isinstance(raw, list):
            raise InvalidDescriptorError(
                _join(path, "breakpoints"), "expected a list"
            )
        points = []
        for i, point in enumerate(raw):
            field = _join(path, f"breakpoints[{i}]")
            if not (
                isinstance(point, (list, tuple))
                and len(point) == 2
            ):
                raise InvalidDescriptorError(
                    field, "expected a [t, y] pair"
                )
            points.append(
                (
                    decode_real(point[0], field),
                    decode_real(point[1], field),
                )
            )
        tail = self._deserialize_tail(
            self._required(data, "tail", path),
            _join(path, "tail"),
        )
        return PiecewiseLinear(tuple(points), tail)

    def _deserialize_tail(self, data: Any, path: str) -> Tail:
        if not isinstance(data, dict):
            raise InvalidDescriptorError(path, "expected an object")
        if "slope" in data:
            return Slope(
                decode_real(data["slope"], _join(path, "slope"))
            )
        if "b" not in data:
            raise InvalidDescriptorError(
                path, "expected either \"slope\" or \"b\""
            )
        pole: Optional[float] = None
        if data.get("pole") is not None:
            pole = decode_real(data["pole"], _join(path, "pole"))
        return FiniteB(
            b=decode_real(data["b"], _join(path, "b")),
            phi_b=decode_extreal(
                data.get("phi_b", "inf"), _join(path, "phi_b")
            ),
            pole=pole,
        )

    def _deserialize_sum(
        self, data: dict[str, Any], path: str
    ) -> YoungFunction:
        return Sum(
            self.deserialize(
                self._required(data, "lhs", path),
                _join(path, "lhs"),
            ),
            self.deserialize(
                self._required(data, "rhs", path),
                _join(path, "rhs"),
            ),
        )

    def _deserialize_arg_scale(
        self, data: dict[str, Any], path: str
    ) -> YoungFunction:
        inner = self.deserialize(
            self._required(data, "inner", path),
            _join(path, "inner"),
        )
        return ArgScale(
            inner,
            decode_real(
                self._required(data, "c", path), _join(path, "c")
            ),
        )
