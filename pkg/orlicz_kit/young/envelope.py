from __future__ import annotations

import math

from ..exceptions import InvalidValueError, YoungClassError
from ..types import YoungClass
from .base import YoungFunction
from .families import Sum
from .piecewise import FiniteB, PiecewiseLinear


def barrier(b: float, delta: float) -> PiecewiseLinear:
    """0 on [0, delta*b], (t - delta*b) / (b - t) on (delta*b, b), inf after."""
    return PiecewiseLinear(
        ((0.0, 0.0), (delta * b, 0.0)),
        FiniteB(b, math.inf),
    )


def envelope_y2(
    phi: YoungFunction, delta: float
) -> YoungFunction:
    """
    Y2 majorant Psi = Phi + barrier of a Y3 function.

    Psi(delta t) <= Phi(t) <= Psi(t) for all t, and b(Psi) = b(Phi).
    """
    actual = phi.classify()
    if actual is not YoungClass.Y3:
        raise YoungClassError(
            actual,
            "Y3",
            hint="the envelope only applies to Y3 functions",
        )
    if not (0.0 < delta < 1.0):
        raise InvalidValueError(
            f"delta must lie in (0, 1), got {delta!r}"
        )
    return Sum(phi, barrier(phi.b, delta))
