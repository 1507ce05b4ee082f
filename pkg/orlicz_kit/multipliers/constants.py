"""
Grid estimates of the constants relating Phi1^-1 Phi3^-1 to Phi2^-1.

    upper:  Phi1^-1(u) Phi3^-1(u) <= C Phi2^-1(u)
    lower:  Phi2^-1(u) <= C Phi1^-1(u) Phi3^-1(u)

A direction is unbounded when a ratio is infinite, exceeds OVERFLOW_RATIO,
or peaks on a grid end while still growing by EDGE_GROWTH per decade.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from ..exceptions import UnboundedOnGridError
from ..logging import get_logger
from ..types import DEFAULT_PRECISION, Precision, UGrid
from ..young import YoungFunction

logger = get_logger("multipliers.constants")

OVERFLOW_RATIO = 1e12
EDGE_GROWTH = 1.2
REFINE_POINTS = 64


class Direction(str, Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class Triple:
    phi1: YoungFunction
    phi2: YoungFunction
    phi3: YoungFunction

    def ratio(
        self,
        direction: Direction,
        u: float,
        precision: Precision = DEFAULT_PRECISION,
    ) -> Optional[float]:
        """The ratio at u; None for 0/0, inf for a positive over zero."""
        product = self.phi1.inverse(
            u, precision
        ) * self.phi3.inverse(u, precision)
        middle = self.phi2.inverse(u, precision)
        if direction is Direction.UPPER:
            num, den = product, middle
        else:
            num, den = middle, product
        if num == 0.0 and den == 0.0:
            return None
        if den == 0.0 or math.isinf(num):
            return math.inf
        return num / den


@dataclass(frozen=True)
class TripleConstant:
    c_upper: float
    c_lower: float
    u_grid: UGrid
    argmax_upper: Optional[float] = None
    argmax_lower: Optional[float] = None

    @property
    def upper_bounded(self) -> bool:
        return math.isfinite(self.c_upper)

    @property
    def lower_bounded(self) -> bool:
        return math.isfinite(self.c_lower)

    def require_bounded(self, direction: Direction) -> float:
        value = (
            self.c_upper
            if Direction(direction) is Direction.UPPER
            else self.c_lower
        )
        if not math.isfinite(value):
            raise UnboundedOnGridError(Direction(direction).value)
        return value


def _direction_sup(
    triple: Triple,
    direction: Direction,
    grid: UGrid,
    points: list[float],
    precision: Precision,
    refine: bool,
) -> tuple[float, Optional[float]]:
    ratios = np.array(
        [
            r if r is not None else np.nan
            for r in (
                triple.ratio(direction, u, precision)
                for u in points
            )
        ]
    )
    if np.all(np.isnan(ratios)):
        return 0.0, None
    if np.any(np.isinf(ratios)):
        return math.inf, None

    i = int(np.nanargmax(ratios))
    best = float(ratios[i])
    if best > OVERFLOW_RATIO:
        return math.inf, points[i]

    last = len(points) - 1
    if i in (0, last):
        step = max(1, int(round(grid.points_per_decade)))
        inner = min(step, last) if i == 0 else max(last - step, 0)
        inner_ratio = ratios[inner]
        if (
            not np.isnan(inner_ratio)
            and inner_ratio > 0.0
            and best / inner_ratio > EDGE_GROWTH
        ):
            return math.inf, points[i]

    argmax = points[i]
    if refine and len(points) > 2:
        lo = points[max(i - 1, 0)]
        hi = points[min(i + 1, last)]
        for u in np.logspace(
            math.log10(lo), math.log10(hi), REFINE_POINTS
        ).tolist():
            r = triple.ratio(direction, u, precision)
            if r is not None and r > best:
                best, argmax = r, u
        if best > OVERFLOW_RATIO:
            return math.inf, argmax
    return best, argmax


def estimate_constants(
    phi1: YoungFunction,
    phi2: YoungFunction,
    phi3: YoungFunction,
    grid: UGrid = UGrid(),
    precision: Precision = DEFAULT_PRECISION,
    refine: bool = True,
) -> TripleConstant:
    triple = Triple(phi1, phi2, phi3)
    points = grid.points()
    c_upper, argmax_upper = _direction_sup(
        triple, Direction.UPPER, grid, points, precision, refine
    )
    c_lower, argmax_lower = _direction_sup(
        triple, Direction.LOWER, grid, points, precision, refine
    )
    logger.constants_estimated(c_upper, c_lower, len(points))
    return TripleConstant(
        c_upper=c_upper,
        c_lower=c_lower,
        u_grid=grid,
        argmax_upper=argmax_upper,
        argmax_lower=argmax_lower,
    )


def validate_constant(
    phi1: YoungFunction,
    phi2: YoungFunction,
    phi3: YoungFunction,
    direction: Direction,
    constant: float,
    us: Iterable[float],
    precision: Precision = DEFAULT_PRECISION,
) -> float:
    """Raise ``constant`` to cover the ratio at every u a case needs."""
    triple = Triple(phi1, phi2, phi3)
    validated = constant
    for u in us:
        if not (0.0 < u < math.inf):
            continue
        r = triple.ratio(direction, u, precision)
        if r is not None and r > validated:
            validated = r
    if validated > constant:
        logger.debug(
            f"{Direction(direction).value} constant raised "
            f"from {constant:.6g} to {validated:.6g}"
        )
    return validated


def ratio_table(
    phi1: YoungFunction,
    phi2: YoungFunction,
    phi3: YoungFunction,
    grid: UGrid,
    precision: Precision = DEFAULT_PRECISION,
) -> list[tuple[float, Optional[float], Optional[float]]]:
    """(u, upper ratio, lower ratio) rows for plotting."""
    triple = Triple(phi1, phi2, phi3)
    return [
        (
            u,
            triple.ratio(Direction.UPPER, u, precision),
            triple.ratio(Direction.LOWER, u, precision),
        )
        for u in grid.points()
    ]
