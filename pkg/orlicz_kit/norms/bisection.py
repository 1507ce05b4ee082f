"""
Bisection on a monotone predicate in lambda.

The predicate must be False below the answer and True above it. Brackets
are grown geometrically until they straddle the switch, then halved until
no float lies strictly between the ends.
"""

from __future__ import annotations

from typing import Callable

from ..logging import get_logger

logger = get_logger("norms.bisection")

Predicate = Callable[[float], bool]

_MAX_EXPANSIONS = 2100


def expand_upper(
    predicate: Predicate, hi: float
) -> tuple[float, float]:
    """Grow hi until the predicate holds; returns (last failing, hi)."""
    lo = 0.0
    for step in range(_MAX_EXPANSIONS):
        if predicate(hi):
            if step:
                logger.bracket_expanded("upper", hi, step)
            return lo, hi
        lo, hi = hi, hi * 2.0
    raise ArithmeticError(
        f"no upper bracket found below {hi!r}"
    )


def expand_lower(
    predicate: Predicate, lo: float
) -> tuple[float, float]:
    """Shrink lo until the predicate fails; returns (lo, last holding)."""
    hi = lo
    for step in range(_MAX_EXPANSIONS):
        if not predicate(lo):
            if step:
                logger.bracket_expanded("lower", lo, step)
            return lo, hi
        lo, hi = lo * 0.5, lo
        if lo == 0.0:
            break
    raise ArithmeticError(
        f"no lower bracket found above {lo!r}"
    )


def bisect_predicate(
    predicate: Predicate,
    lo: float,
    hi: float,
    max_iterations: int,
) -> float:
    """Smallest float hi found with predicate(hi) true and predicate(lo) false."""
    for _ in range(max_iterations):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if predicate(mid):
            hi = mid
        else:
            lo = mid
    return hi
