"""
Young functions: families, combinators, generalized inverses and audits.

The module-level helpers take and return ExtReal; the methods on
YoungFunction work on plain floats for the inner loops.
"""

from __future__ import annotations

from ..xreal import ExtReal
from .audits import check_p1_p2_p3, convexity_audit
from .base import YoungFunction
from .envelope import barrier, envelope_y2
from .families import (
    ArgScale,
    ExpPower,
    LinfIndicator,
    Power,
    PowerLog,
    Sum,
)
from .piecewise import (
    FiniteB,
    PiecewiseLinear,
    Slope,
    Tail,
    piecewise,
)


def evaluate(phi: YoungFunction, t: float) -> ExtReal:
    return ExtReal(phi.evaluate(ExtReal(t)))


def endpoints(
    phi: YoungFunction,
) -> tuple[ExtReal, ExtReal]:
    a, b = phi.endpoints()
    return ExtReal(a), ExtReal(b)


def classify(phi: YoungFunction):
    return phi.classify()


def inverse(phi: YoungFunction, u: float) -> ExtReal:
    return ExtReal(phi.inverse(ExtReal(u)))


def inverse_alt(phi: YoungFunction, u: float) -> ExtReal:
    return ExtReal(phi.inverse_alt(ExtReal(u)))


__all__ = [
    "ArgScale",
    "ExpPower",
    "FiniteB",
    "LinfIndicator",
    "PiecewiseLinear",
    "Power",
    "PowerLog",
    "Slope",
    "Sum",
    "Tail",
    "YoungFunction",
    "barrier",
    "check_p1_p2_p3",
    "classify",
    "convexity_audit",
    "endpoints",
    "envelope_y2",
    "evaluate",
    "inverse",
    "inverse_alt",
    "piecewise",
]
