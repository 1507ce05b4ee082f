"""
Comparison of the exact inverse with the textbook surrogates

    Power(p)        u^(1/p)
    PowerLog(p, q)  u^(1/p) max(1, log u)^(-q/p)
    ExpPower(p)     u^(1/p) for u < 2, (log u)^(1/p) for u >= 2

K is the largest of ratio and 1/ratio over the grid. It is stable when
widening the grid by two decades on each side moves it by under 5%.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from ..exceptions import InvalidValueError
from ..types import (
    DEFAULT_PRECISION,
    AuditReport,
    Precision,
    UGrid,
    relative_gap,
)
from ..young import ExpPower, Power, PowerLog, YoungFunction

EXAMPLE_GRID = UGrid(1e-6, 1e12, 721)
STABILITY_RTOL = 0.05
EXTENSION_DECADES = 2.0

Surrogate = Callable[[float], float]


def surrogate_for(phi: YoungFunction) -> Surrogate:
    if isinstance(phi, Power):
        p = phi.p
        return lambda u: u ** (1.0 / p)
    if isinstance(phi, PowerLog):
        p, q = phi.p, phi.q
        return lambda u: u ** (1.0 / p) * max(
            1.0, math.log(u)
        ) ** (-q / p)
    if isinstance(phi, ExpPower):
        p = phi.p
        return lambda u: (
            u ** (1.0 / p)
            if u < 2.0
            else math.log(u) ** (1.0 / p)
        )
    raise InvalidValueError(
        f"no asymptotic surrogate for family {phi.family!r}"
    )


def _spread(
    phi: YoungFunction,
    surrogate: Surrogate,
    grid: UGrid,
    precision: Precision,
) -> tuple[float, float]:
    us = np.asarray(grid.points())
    exact = np.array([phi.inverse(u, precision) for u in us])
    approx = np.array([surrogate(u) for u in us])
    ratios = exact / approx
    spread = np.maximum(ratios, 1.0 / ratios)
    i = int(np.argmax(spread))
    return float(spread[i]), float(us[i])


def example_asymptotics_audit(
    phi: YoungFunction,
    grid: UGrid = EXAMPLE_GRID,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    if grid.u_min < 1e-6 or grid.u_max > 1e12:
        raise InvalidValueError(
            "u range must lie within [1e-6, 1e12]"
        )
    surrogate = surrogate_for(phi)
    k, argmax = _spread(phi, surrogate, grid, precision)
    k_wide, _ = _spread(
        phi,
        surrogate,
        grid.extended(EXTENSION_DECADES),
        precision,
    )
    change = relative_gap(k, k_wide)
    finite = math.isfinite(k) and math.isfinite(k_wide)
    return AuditReport.from_margins(
        "example-asymptotics",
        [
            (finite, 0.0 if finite else -math.inf),
            (change < STABILITY_RTOL, STABILITY_RTOL - change),
        ],
        family=phi.family,
        k=k,
        k_extended=k_wide,
        argmax_u=argmax,
        change=change,
    )


def asymptotics_table(
    phi: YoungFunction,
    grid: UGrid = EXAMPLE_GRID,
    precision: Precision = DEFAULT_PRECISION,
) -> list[tuple[float, float]]:
    """(u, inverse / surrogate) rows for plotting."""
    surrogate = surrogate_for(phi)
    return [
        (u, phi.inverse(u, precision) / surrogate(u))
        for u in grid.points()
    ]
