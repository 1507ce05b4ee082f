"""
Nonnegative extended reals.

ExtReal is a float in [0, inf] that refuses NaN and negative values and
multiplies with the measure-theoretic convention inf * 0 = 0 * inf = 0.
Being a float subclass it mixes freely with ``math`` and plain floats;
the module-level functions are the explicit operations.
"""

from __future__ import annotations

import math
from enum import IntEnum
from typing import Union

from .exceptions import InvalidValueError

Number = Union[int, float, str]

_INF_SPELLINGS = frozenset(
    {"inf", "+inf", "infinity", "+infinity", "∞"}
)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class ExtReal(float):

    def __new__(cls, value: Number = 0.0) -> ExtReal:
        if isinstance(value, ExtReal):
            return value
        if isinstance(value, str):
            text = value.strip().lower()
            value = (
                math.inf
                if text in _INF_SPELLINGS
                else float(text)
            )
        number = float(value)
        if math.isnan(number):
            raise InvalidValueError(
                "NaN is not an extended real"
            )
        if number < 0:
            raise InvalidValueError(
                f"extended reals are nonnegative, got {number!r}"
            )
        # normalises -0.0
        return super().__new__(cls, number + 0.0)

    @property
    def is_finite(self) -> bool:
        return not math.isinf(self)

    def __mul__(self, other: Number) -> ExtReal:
        return mul(self, other)

    __rmul__ = __mul__

    def __add__(self, other: Number) -> ExtReal:
        return add(self, other)

    __radd__ = __add__

    def __truediv__(self, other: Number) -> ExtReal:
        return div_by_finite_positive(self, other)

    def __repr__(self) -> str:
        if self.is_finite:
            return f"ExtReal({float(self)!r})"
        return "ExtReal(inf)"

    def __str__(self) -> str:
        return "∞" if not self.is_finite else repr(float(self))


ZERO = ExtReal(0.0)
ONE = ExtReal(1.0)
INF = ExtReal(math.inf)


def mul(x: Number, y: Number) -> ExtReal:
    left, right = ExtReal(x), ExtReal(y)
    if left == 0.0 or right == 0.0:
        return ZERO
    return ExtReal(float(left) * float(right))


def add(x: Number, y: Number) -> ExtReal:
    return ExtReal(float(ExtReal(x)) + float(ExtReal(y)))


def cmp(x: Number, y: Number) -> Ordering:
    left, right = float(ExtReal(x)), float(ExtReal(y))
    if left < right:
        return Ordering.LESS
    if left > right:
        return Ordering.GREATER
    return Ordering.EQUAL


def div_by_finite_positive(
    x: Number, divisor: Number
) -> ExtReal:
    denominator = float(divisor)
    if not (0.0 < denominator < math.inf):
        raise InvalidValueError(
            f"division requires a finite positive divisor, got {denominator!r}"
        )
    return ExtReal(float(ExtReal(x)) / denominator)


def safe_product(x: float, y: float) -> float:
    """Float product on [0, inf] with inf * 0 = 0, for hot loops."""
    if x == 0.0 or y == 0.0:
        return 0.0
    return x * y
