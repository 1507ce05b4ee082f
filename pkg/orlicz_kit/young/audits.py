from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable

from ..types import (
    CHECK_SLACK,
    DEFAULT_PRECISION,
    EXACT_SLACK,
    AuditReport,
    Precision,
    YoungClass,
    relative_gap,
    relative_slack,
    within_slack,
)
from .base import YoungFunction


def check_p1_p2_p3(
    phi: YoungFunction,
    samples: Iterable[float],
    precision: Precision = DEFAULT_PRECISION,
    rel: float = CHECK_SLACK,
) -> AuditReport:
    """
    Inverse laws at every sample, read both as t and as u:

        P1  Phi(inv(t)) <= t <= inv(Phi(t))
        P2  inv(Phi(t)) = t             when Phi(t) is in (0, inf)
        P3  Phi(inv(u)) = u             for Y1 and Y2 only
    """
    points = [float(x) for x in samples]
    if not points:
        raise ValueError("samples must be nonempty")

    assert_p3 = phi.classify() is not YoungClass.Y3
    per_sample: list[dict] = []
    margins: list[tuple[bool, float]] = []

    for x in points:
        phi_x = phi.evaluate(x)
        round_trip = phi.inverse(phi_x, precision)
        phi_inv = phi.evaluate(phi.inverse(x, precision))

        p1_left = within_slack(phi_inv, x, rel)
        # t <= inv(Phi(t)); the inverse returns the bracket's lower end
        p1_right = within_slack(x, round_trip, rel)
        margins.append(
            (p1_left, relative_slack(phi_inv, x))
        )
        margins.append(
            (p1_right, relative_slack(x, round_trip))
        )

        p2 = None
        if 0.0 < phi_x < math.inf:
            gap = relative_gap(round_trip, x)
            p2 = gap <= rel
            margins.append((p2, rel - gap))

        p3 = None
        if assert_p3:
            gap = relative_gap(phi_inv, x)
            p3 = gap <= rel
            margins.append((p3, rel - gap))

        per_sample.append(
            {
                "x": x,
                "p1": p1_left and p1_right,
                "p2": p2,
                "p3": p3,
            }
        )

    return AuditReport.from_margins(
        "inverse-laws",
        margins,
        samples=per_sample,
        young_class=phi.classify().value,
    )


def convexity_audit(
    phi: YoungFunction,
    grid: Iterable[float],
    tolerance: float = EXACT_SLACK,
) -> AuditReport:
    """Midpoint convexity on every pair of grid points in [0, b)."""
    b = phi.b
    points = sorted(
        {float(x) for x in grid if 0.0 <= x < b}
    )
    values = [phi.evaluate(x) for x in points]

    margins: list[tuple[bool, float]] = []
    worst_pair = None
    worst = math.inf
    for (s, phi_s), (t, phi_t) in combinations(
        zip(points, values), 2
    ):
        if math.isinf(phi_s) or math.isinf(phi_t):
            continue
        mid = phi.evaluate(0.5 * (s + t))
        bound = 0.5 * (phi_s + phi_t)
        allowed = tolerance * (
            1.0 + abs(phi_s) + abs(phi_t)
        )
        margin = (bound + allowed - mid) / (
            1.0 + abs(bound)
        )
        margins.append((mid <= bound + allowed, margin))
        if margin < worst:
            worst, worst_pair = margin, (s, t)

    report = AuditReport.from_margins(
        "convexity",
        margins,
        points=len(points),
        worst_pair=worst_pair,
    )
    if not report.passed:
        report.reasoning = (
            f"midpoint convexity fails between {worst_pair}"
        )
    return report
