from __future__ import annotations

from ..measure import SimpleFunction
from ..types import (
    CHECK_SLACK,
    DEFAULT_PRECISION,
    EXACT_SLACK,
    AuditReport,
    NormKind,
    Precision,
    relative_gap,
    relative_slack,
    within_slack,
)
from ..young import YoungFunction
from .luxemburg import lux_norm
from .result import NormResult
from .weak import weak_norm

NORM_ENGINES = {
    NormKind.WEAK: weak_norm,
    NormKind.LUX: lux_norm,
}


def norm_of(
    kind: NormKind,
    phi: YoungFunction,
    f: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
) -> NormResult:
    return NORM_ENGINES[NormKind(kind)](phi, f, precision)


def _value(kind, phi, f, precision) -> float:
    return float(norm_of(kind, phi, f, precision).value)


def homogeneity_audit(
    phi: YoungFunction,
    f: SimpleFunction,
    c: float,
    kind: NormKind = NormKind.WEAK,
    precision: Precision = DEFAULT_PRECISION,
    rel: float = EXACT_SLACK,
) -> AuditReport:
    scaled = _value(kind, phi, f.scale(c), precision)
    expected = c * _value(kind, phi, f, precision)
    gap = relative_gap(scaled, expected)
    return AuditReport.from_margins(
        "homogeneity",
        [(gap <= rel, rel - gap)],
        kind=NormKind(kind).value,
        c=c,
        scaled=scaled,
        expected=expected,
    )


def lattice_audit(
    phi: YoungFunction,
    h: SimpleFunction,
    f: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
    rel: float = EXACT_SLACK,
) -> AuditReport:
    """|h| <= |f| atomwise implies ||h|| <= ||f|| for both norms."""
    margins = []
    details = {}
    for kind in NormKind:
        small = _value(kind, phi, h, precision)
        large = _value(kind, phi, f, precision)
        margins.append(
            (
                within_slack(small, large, rel),
                relative_slack(small, large),
            )
        )
        details[kind.value] = [small, large]
    return AuditReport.from_margins(
        "lattice", margins, **details
    )


def quasi_triangle_audit(
    phi: YoungFunction,
    f: SimpleFunction,
    g: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    """||f + g||_w <= 2 (||f||_w + ||g||_w)."""
    total = _value(NormKind.WEAK, phi, f.add(g), precision)
    bound = 2.0 * (
        _value(NormKind.WEAK, phi, f, precision)
        + _value(NormKind.WEAK, phi, g, precision)
    )
    return AuditReport.from_margins(
        "quasi-triangle",
        [
            (
                within_slack(total, bound, CHECK_SLACK),
                relative_slack(total, bound),
            )
        ],
        lhs=total,
        rhs=bound,
    )


def lux_triangle_audit(
    phi: YoungFunction,
    f: SimpleFunction,
    g: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    total = _value(NormKind.LUX, phi, f.add(g), precision)
    bound = _value(
        NormKind.LUX, phi, f, precision
    ) + _value(NormKind.LUX, phi, g, precision)
    return AuditReport.from_margins(
        "lux-triangle",
        [
            (
                within_slack(total, bound, CHECK_SLACK),
                relative_slack(total, bound),
            )
        ],
        lhs=total,
        rhs=bound,
    )


def rescaling_audit(
    phi: YoungFunction,
    psi: YoungFunction,
    f: SimpleFunction,
    c1: float,
    c2: float,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    """
    Given Phi(c1 t) <= Psi(t) <= Phi(c2 t), checks
    c1 ||f||_Phi <= ||f||_Psi <= c2 ||f||_Phi for the weak norm.
    """
    base = _value(NormKind.WEAK, phi, f, precision)
    other = _value(NormKind.WEAK, psi, f, precision)
    lower, upper = c1 * base, c2 * base
    return AuditReport.from_margins(
        "rescaling",
        [
            (
                within_slack(lower, other, CHECK_SLACK),
                relative_slack(lower, other),
            ),
            (
                within_slack(other, upper, CHECK_SLACK),
                relative_slack(other, upper),
            ),
        ],
        lower=lower,
        value=other,
        upper=upper,
    )
