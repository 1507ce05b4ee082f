from __future__ import annotations

import math

from ..exceptions import InvalidValueError
from ..measure import SimpleFunction
from ..norms import lux_norm
from ..types import (
    DEFAULT_PRECISION,
    WITNESS_SLACK,
    AuditReport,
    NormKind,
    Precision,
    relative_gap,
)
from ..young import Power
from .pwm import pwm_search


def classical_identity_audit(
    p1: float,
    p2: float,
    g: SimpleFunction,
    budget: int = 2000,
    seed: int = 0,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    """
    The multiplier norm from L^p1 to L^p2 (p1 >= p2) is ||g||_{L^p3} with
    1/p3 = 1/p2 - 1/p1, and ||g||_inf when p1 = p2.
    """
    if p1 < p2:
        raise InvalidValueError(
            f"p1 must be at least p2, got p1={p1!r}, p2={p2!r}"
        )
    phi1, phi2 = Power(p1), Power(p2)

    if p1 == p2:
        target = g.max_value
        seeds: list[SimpleFunction] = []
        p3 = math.inf
    else:
        p3 = 1.0 / (1.0 / p2 - 1.0 / p1)
        target = float(lux_norm(Power(p3), g, precision).value)
        # equality case of the Hölder inequality
        seeds = [
            g.with_values(v ** (p3 / p1) for v in g.values)
        ]

    estimate = pwm_search(
        phi1,
        phi2,
        g,
        budget=budget,
        seed=seed,
        kind=NormKind.LUX,
        extra_seeds=seeds,
        precision=precision,
    ).value

    gap = relative_gap(estimate, target)
    return AuditReport.from_margins(
        "classical-identity",
        [(gap <= WITNESS_SLACK, WITNESS_SLACK - gap)],
        p1=p1,
        p2=p2,
        p3=p3,
        estimate=estimate,
        target=target,
    )
