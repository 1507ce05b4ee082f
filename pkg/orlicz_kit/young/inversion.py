"""
Bracketed bisection for the generalized inverse.

Maintains Phi(lo) <= u < Phi(hi) and returns lo, so Phi(inverse(u)) <= u
holds exactly in floating point.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from ..types import Precision

if TYPE_CHECKING:
    from .base import YoungFunction

_MAX_DOUBLINGS = 2100
_MAX_SETTLE_STEPS = 64


def bisect_inverse(
    phi: YoungFunction, u: float, precision: Precision
) -> float:
    a, b = phi.endpoints()

    if not math.isinf(b):
        if phi.evaluate(b) <= u:
            return b
        lo, hi = a, b
    else:
        lo = a
        hi = max(2.0 * a, 1.0)
        for _ in range(_MAX_DOUBLINGS):
            if phi.evaluate(hi) > u:
                break
            lo, hi = hi, hi * 2.0

    for _ in range(precision.max_iterations):
        if hi - lo <= precision.inverse_rtol * hi:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if phi.evaluate(mid) > u:
            hi = mid
        else:
            lo = mid
    return lo


def settle_below(
    phi: YoungFunction, t: float, u: float, precision: Precision
) -> float:
    """
    Step a closed-form estimate down until Phi(t) <= u.

    Closed forms can round a few ulps past the true inverse; this restores
    the same exact guarantee bisection gives.
    """
    a = phi.a
    for _ in range(_MAX_SETTLE_STEPS):
        if t <= a:
            return a
        if phi.evaluate(t) <= u:
            return t
        t = math.nextafter(t, a)
    return bisect_inverse(phi, u, precision)
