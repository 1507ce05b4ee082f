"""Checks of the identities and embeddings the weak quasi-norm satisfies."""

from __future__ import annotations

import math
from typing import Iterable, Optional

import numpy as np

from ..exceptions import YoungClassError, ZeroFunctionError
from ..measure import SimpleFunction
from ..measure.audits import truncation_stages
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
from ..young import YoungFunction
from .luxemburg import lux_norm
from .sup_forms import (
    form2_grid_lower_bound,
    weak_sup_form1,
    weak_sup_form2,
    weak_sup_form3,
)
from .weak import weak_norm


def normalization_audit(
    phi: YoungFunction,
    f: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
) -> float:
    """|sup_t Phi(t) mu(f / ||f||_w, t) - 1| for Phi in Y1 or Y2."""
    young_class = phi.classify()
    if young_class is YoungClass.Y3:
        raise YoungClassError(
            young_class,
            "Y1 or Y2",
            hint="the normalization need not be attained for Y3",
        )
    if f.is_zero():
        raise ZeroFunctionError()
    norm = weak_norm(phi, f, precision).value
    return abs(
        float(weak_sup_form1(phi, f.divide(norm))) - 1.0
    )


def le1_audit(
    phi: YoungFunction,
    f: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
) -> bool:
    """sup_u u mu(Phi(|f| / ||f||_w), u) <= 1, any class."""
    if f.is_zero():
        raise ZeroFunctionError()
    norm = weak_norm(phi, f, precision).value
    value = float(weak_sup_form3(phi, f.divide(norm)))
    return within_slack(value, 1.0, CHECK_SLACK)


def embedding_audit(
    phi: YoungFunction,
    f: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    """||f||_w <= ||f||_lux and, for finite b, max|f| <= b ||f||_w."""
    weak = float(weak_norm(phi, f, precision).value)
    lux = float(lux_norm(phi, f, precision).value)
    margins = [
        (
            within_slack(weak, lux, CHECK_SLACK),
            relative_slack(weak, lux),
        )
    ]
    details = {"weak": weak, "lux": lux}

    b = phi.b
    if math.isfinite(b):
        bound = b * weak
        margins.append(
            (
                within_slack(f.max_value, bound, CHECK_SLACK),
                relative_slack(f.max_value, bound),
            )
        )
        details["sup"] = f.max_value
        details["b_times_weak"] = bound

    return AuditReport.from_margins(
        "embedding", margins, **details
    )


def fatou_audit(
    phi: YoungFunction,
    f: SimpleFunction,
    stages: int,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    """Weak norms of min(f, j max f / J) increase to ||f||_w."""
    norms = [
        float(weak_norm(phi, f_j, precision).value)
        for f_j in truncation_stages(f, stages)
    ]
    margins = [
        (
            within_slack(earlier, later, EXACT_SLACK),
            relative_slack(earlier, later),
        )
        for earlier, later in zip(norms, norms[1:])
    ]
    target = float(weak_norm(phi, f, precision).value)
    top = max(norms)
    margins.append(
        (
            target <= top + CHECK_SLACK,
            relative_slack(target, top),
        )
    )
    return AuditReport.from_margins(
        "fatou", margins, norms=norms, limit=target
    )


def default_u_points(count: int = 121) -> list[float]:
    return np.logspace(-9.0, 9.0, count).tolist()


def sup_forms_audit(
    phi: YoungFunction,
    f: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
    grid: Optional[Iterable[float]] = None,
    rel: float = CHECK_SLACK,
) -> AuditReport:
    """
    The three suprema agree: exactly on {0, inf} outcomes, within rel on
    finite ones; the grid bound never exceeds form2.
    """
    form1 = float(weak_sup_form1(phi, f))
    form2 = float(weak_sup_form2(phi, f, precision))
    form3 = float(weak_sup_form3(phi, f))
    points = (
        list(grid) if grid is not None else default_u_points()
    )
    grid_bound = float(
        form2_grid_lower_bound(phi, f, points, precision)
    )

    discrepancy = max(
        relative_gap(form1, form2),
        relative_gap(form1, form3),
        relative_gap(form2, form3),
    )
    margins = [
        (discrepancy <= rel, rel - discrepancy),
        (
            within_slack(grid_bound, form2, rel),
            relative_slack(grid_bound, form2),
        ),
    ]
    report = AuditReport.from_margins(
        "norms-equivalence",
        margins,
        form1=form1,
        form2=form2,
        form3=form3,
        grid_lower_bound=grid_bound,
        discrepancy=discrepancy,
    )
    if not report.passed:
        report.reasoning = (
            f"sup forms disagree: {form1!r}, {form2!r}, {form3!r}"
        )
    return report
