"""
Piecewise-linear Young functions.

Breakpoints (t_0, y_0) = (0, 0), (t_1, y_1), ..., (t_K, y_K) with strictly
increasing t and nondecreasing slopes. After t_K the function continues
with one of three tails:

    Slope(s)              y_K + s (t - t_K) up to infinity
    FiniteB(b, phi_b)     linear from (t_K, y_K) to (b, phi_b), inf beyond b
    FiniteB(b, inf)       pole y_K + S (t - t_K) / (b - t) on [t_K, b)

The pole keeps Y2 functions left-continuous at b. S defaults to
s_last * (b - t_K), which matches the last slope at t_K, or 1 when the
last slope is 0.

Evaluation, endpoints and the inverse are exact segment computations.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import cached_property
from typing import ClassVar, Optional, Sequence, Union

from ..exceptions import InvalidDescriptorError
from ..types import Precision
from .base import YoungFunction
from .inversion import settle_below

SLOPE_RTOL = 1e-9


@dataclass(frozen=True)
class Slope:
    s: float


@dataclass(frozen=True)
class FiniteB:
    b: float
    phi_b: float = math.inf
    pole: Optional[float] = None

    @property
    def is_pole(self) -> bool:
        return math.isinf(self.phi_b)


Tail = Union[Slope, FiniteB]


def _not_below(later: float, earlier: float) -> bool:
    return later >= earlier - SLOPE_RTOL * abs(earlier)


@dataclass(frozen=True)
class PiecewiseLinear(YoungFunction):
    breakpoints: tuple[tuple[float, float], ...]
    tail: Tail
    strict: bool = field(default=True, compare=False)

    family: ClassVar[str] = "pl"

    def __post_init__(self):
        points = tuple(
            (float(t), float(y)) for t, y in self.breakpoints
        )
        object.__setattr__(self, "breakpoints", points)
        self._validate()

    # =========================================================================
    # VALIDATION
    # =========================================================================

    def _validate(self):
        points = self.breakpoints
        if not points:
            raise InvalidDescriptorError(
                "breakpoints", "at least (0, 0) is required"
            )
        if points[0] != (0.0, 0.0):
            raise InvalidDescriptorError(
                "breakpoints[0]", "must be (0, 0)"
            )
        for i in range(1, len(points)):
            t, y = points[i]
            if not (math.isfinite(t) and math.isfinite(y)):
                raise InvalidDescriptorError(
                    f"breakpoints[{i}]", "must be finite"
                )
            if t <= points[i - 1][0]:
                raise InvalidDescriptorError(
                    f"breakpoints[{i}]",
                    "t must be strictly increasing",
                )

        slopes = self.slopes
        for i, s in enumerate(slopes):
            if s < 0.0:
                raise InvalidDescriptorError(
                    f"breakpoints[{i + 1}]",
                    "slopes must be nonnegative",
                )
            if (
                self.strict
                and i > 0
                and not _not_below(s, slopes[i - 1])
            ):
                raise InvalidDescriptorError(
                    f"breakpoints[{i + 1}]",
                    "slopes must be nondecreasing",
                )
        self._validate_tail()

    def _validate_tail(self):
        t_k, y_k = self.breakpoints[-1]
        s_last = self.last_slope
        tail = self.tail

        if isinstance(tail, Slope):
            if not (math.isfinite(tail.s) and tail.s > 0.0):
                raise InvalidDescriptorError(
                    "tail.s", "must be a finite positive slope"
                )
            if self.strict and not _not_below(tail.s, s_last):
                raise InvalidDescriptorError(
                    "tail.s",
                    "must not be below the last segment slope",
                )
            return

        if not isinstance(tail, FiniteB):
            raise InvalidDescriptorError(
                "tail", f"unknown tail {tail!r}"
            )
        if not (math.isfinite(tail.b) and tail.b > 0.0):
            raise InvalidDescriptorError(
                "tail.b", "must be a finite positive real"
            )
        if tail.b < t_k:
            raise InvalidDescriptorError(
                "tail.b", "must not precede the last breakpoint"
            )
        if tail.is_pole:
            if tail.b == t_k:
                raise InvalidDescriptorError(
                    "tail.b",
                    "an infinite tail needs b beyond the last breakpoint",
                )
            if tail.pole is not None and not (
                math.isfinite(tail.pole) and tail.pole > 0.0
            ):
                raise InvalidDescriptorError(
                    "tail.pole", "must be a finite positive real"
                )
            return

        if math.isnan(tail.phi_b) or tail.phi_b < y_k:
            raise InvalidDescriptorError(
                "tail.phi_b",
                "must be at least the last breakpoint value",
            )
        if tail.b == t_k:
            if tail.phi_b != y_k:
                raise InvalidDescriptorError(
                    "tail.phi_b",
                    "must equal the last breakpoint value when b does",
                )
            return
        if self.strict and not _not_below(
            self.tail_slope, s_last
        ):
            raise InvalidDescriptorError(
                "tail.phi_b",
                "final segment slope must not be below the last slope",
            )

    # =========================================================================
    # SEGMENT DATA
    # =========================================================================

    @cached_property
    def _ts(self) -> list[float]:
        return [t for t, _ in self.breakpoints]

    @cached_property
    def _ys(self) -> list[float]:
        return [y for _, y in self.breakpoints]

    @cached_property
    def slopes(self) -> tuple[float, ...]:
        points = self.breakpoints
        return tuple(
            (points[i][1] - points[i - 1][1])
            / (points[i][0] - points[i - 1][0])
            for i in range(1, len(points))
        )

    @property
    def last_slope(self) -> float:
        return self.slopes[-1] if self.slopes else 0.0

    @property
    def tail_slope(self) -> float:
        """Slope of a finite-value linear tail or a Slope tail."""
        tail = self.tail
        if isinstance(tail, Slope):
            return tail.s
        t_k, y_k = self.breakpoints[-1]
        if tail.is_pole or tail.b == t_k:
            return math.inf
        return (tail.phi_b - y_k) / (tail.b - t_k)

    @property
    def pole_strength(self) -> float:
        tail = self.tail
        if not (isinstance(tail, FiniteB) and tail.is_pole):
            raise AttributeError("tail has no pole")
        if tail.pole is not None:
            return tail.pole
        t_k = self.breakpoints[-1][0]
        s_last = self.last_slope
        if s_last == 0.0:
            return 1.0
        return s_last * (tail.b - t_k)

    # =========================================================================
    # YOUNG FUNCTION INTERFACE
    # =========================================================================

    def _evaluate_finite(self, t: float) -> float:
        t_k, y_k = self.breakpoints[-1]
        tail = self.tail

        if t >= t_k:
            if isinstance(tail, Slope):
                return y_k + tail.s * (t - t_k)
            if t > tail.b:
                return math.inf
            if tail.is_pole:
                if t >= tail.b:
                    return math.inf
                return y_k + self.pole_strength * (
                    t - t_k
                ) / (tail.b - t)
            if t == tail.b:
                return tail.phi_b
            return y_k + self.tail_slope * (t - t_k)

        i = bisect_right(self._ts, t) - 1
        t_i, y_i = self.breakpoints[i]
        if t == t_i:
            return y_i
        return y_i + self.slopes[i] * (t - t_i)

    def _compute_endpoints(self) -> tuple[float, float]:
        ys = self._ys
        t_k, y_k = self.breakpoints[-1]
        tail = self.tail
        b = (
            math.inf
            if isinstance(tail, Slope)
            else tail.b
        )

        if y_k > 0.0:
            last_zero = bisect_right(ys, 0.0) - 1
            return self._ts[last_zero], b
        if (
            isinstance(tail, FiniteB)
            and not tail.is_pole
            and tail.phi_b == 0.0
        ):
            return b, b
        return t_k, b

    def _inverse_finite(
        self, u: float, precision: Precision
    ) -> float:
        return settle_below(
            self, self._closed_form_inverse(u), u, precision
        )

    def _closed_form_inverse(self, u: float) -> float:
        ys = self._ys
        t_k, y_k = self.breakpoints[-1]

        if u < y_k:
            i = bisect_right(ys, u)
            t_lo, y_lo = self.breakpoints[i - 1]
            t_hi = self.breakpoints[i][0]
            t = t_lo + (u - y_lo) / self.slopes[i - 1]
            return min(max(t, t_lo), t_hi)

        tail = self.tail
        if isinstance(tail, Slope):
            return t_k + (u - y_k) / tail.s

        b = tail.b
        if tail.is_pole:
            w = (u - y_k) / self.pole_strength
            t = (t_k + w * b) / (1.0 + w)
            if t >= b:
                t = math.nextafter(b, 0.0)
            return max(t, t_k)

        if tail.b == t_k or tail.phi_b <= u:
            return b
        t = t_k + (u - y_k) / self.tail_slope
        return min(t, b)


def piecewise(
    breakpoints: Sequence[Sequence[float]],
    tail: Tail,
    strict: bool = True,
) -> PiecewiseLinear:
    return PiecewiseLinear(
        tuple(
            (float(t), float(y)) for t, y in breakpoints
        ),
        tail,
        strict=strict,
    )
