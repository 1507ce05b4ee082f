"""
Parametric Young functions and the two combinators.

    Power(p)        t^p
    PowerLog(p, q)  t^p * max(1, log t)^q
    ExpPower(p)     exp(t^p) - 1
    LinfIndicator   0 on [0, 1], inf beyond
    Sum(lhs, rhs)   lhs(t) + rhs(t)
    ArgScale(f, c)  f(c * t)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar

from ..exceptions import InvalidDescriptorError
from ..types import Precision
from .base import YoungFunction
from .inversion import settle_below


def _power(t: float, p: float) -> float:
    try:
        return t**p
    except OverflowError:
        return math.inf


def _require_exponent(name: str, value: float):
    if not (
        isinstance(value, (int, float))
        and math.isfinite(value)
        and value >= 1.0
    ):
        raise InvalidDescriptorError(
            name, f"must be a finite real >= 1, got {value!r}"
        )


@dataclass(frozen=True)
class Power(YoungFunction):
    p: float

    family: ClassVar[str] = "power"

    def __post_init__(self):
        _require_exponent("p", self.p)

    def _evaluate_finite(self, t: float) -> float:
        return _power(t, self.p)

    def _compute_endpoints(self) -> tuple[float, float]:
        return 0.0, math.inf

    def _inverse_finite(
        self, u: float, precision: Precision
    ) -> float:
        return settle_below(self, _power(u, 1.0 / self.p), u, precision)


@dataclass(frozen=True)
class PowerLog(YoungFunction):
    p: float
    q: float

    family: ClassVar[str] = "power_log"

    def __post_init__(self):
        _require_exponent("p", self.p)
        _require_exponent("q", self.q)

    def _evaluate_finite(self, t: float) -> float:
        base = _power(t, self.p)
        if t <= math.e:
            return base
        return base * _power(math.log(t), self.q)

    def _compute_endpoints(self) -> tuple[float, float]:
        return 0.0, math.inf

    def _inverse_finite(
        self, u: float, precision: Precision
    ) -> float:
        # below Phi(e) = e^p the log factor is 1
        if u <= math.exp(self.p):
            return settle_below(
                self, _power(u, 1.0 / self.p), u, precision
            )
        return super()._inverse_finite(u, precision)


@dataclass(frozen=True)
class ExpPower(YoungFunction):
    p: float

    family: ClassVar[str] = "exp_power"

    def __post_init__(self):
        _require_exponent("p", self.p)

    def _evaluate_finite(self, t: float) -> float:
        try:
            return math.expm1(_power(t, self.p))
        except OverflowError:
            return math.inf

    def _compute_endpoints(self) -> tuple[float, float]:
        return 0.0, math.inf

    def _inverse_finite(
        self, u: float, precision: Precision
    ) -> float:
        t = _power(math.log1p(u), 1.0 / self.p)
        return settle_below(self, t, u, precision)


@dataclass(frozen=True)
class LinfIndicator(YoungFunction):
    """Zero on [0, 1] and infinite beyond; its norms are the sup norm."""

    family: ClassVar[str] = "linf"

    def _evaluate_finite(self, t: float) -> float:
        return 0.0 if t <= 1.0 else math.inf

    def _compute_endpoints(self) -> tuple[float, float]:
        return 1.0, 1.0

    def _inverse_finite(
        self, u: float, precision: Precision
    ) -> float:
        return 1.0


@dataclass(frozen=True)
class Sum(YoungFunction):
    lhs: YoungFunction
    rhs: YoungFunction

    family: ClassVar[str] = "sum"

    def _evaluate_finite(self, t: float) -> float:
        return self.lhs.evaluate(t) + self.rhs.evaluate(t)

    def _compute_endpoints(self) -> tuple[float, float]:
        a1, b1 = self.lhs.endpoints()
        a2, b2 = self.rhs.endpoints()
        return min(a1, a2), min(b1, b2)


@dataclass(frozen=True)
class ArgScale(YoungFunction):
    inner: YoungFunction
    c: float

    family: ClassVar[str] = "arg_scale"

    def __post_init__(self):
        if not (
            isinstance(self.c, (int, float))
            and 0.0 < self.c < math.inf
        ):
            raise InvalidDescriptorError(
                "c", f"must be a finite positive real, got {self.c!r}"
            )

    def _evaluate_finite(self, t: float) -> float:
        # keep a and b exact under rounding of c * t
        a, b = self.endpoints()
        if t > b:
            return math.inf
        if t <= a:
            return 0.0
        if t == b:
            return self.inner.evaluate(self.inner.b)
        return self.inner.evaluate(
            min(self.c * t, self.inner.b)
        )

    def _compute_endpoints(self) -> tuple[float, float]:
        a, b = self.inner.endpoints()
        return a / self.c, b / self.c

    def _inverse_finite(
        self, u: float, precision: Precision
    ) -> float:
        t = self.inner.inverse(u, precision) / self.c
        return settle_below(self, t, u, precision)
