from __future__ import annotations

from ..measure import SimpleFunction
from ..norms import lux_norm, weak_norm
from ..types import (
    CHECK_SLACK,
    DEFAULT_PRECISION,
    AuditReport,
    NormKind,
    Precision,
    relative_slack,
    within_slack,
)
from ..young import YoungFunction


def holder_levels(
    phi1: YoungFunction,
    phi3: YoungFunction,
    f: SimpleFunction,
    g: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
    kind: NormKind = NormKind.WEAK,
) -> list[float]:
    """u = max(Phi1(F), Phi3(G)) per atom, F and G the normalized f and g."""
    if f.is_zero() or g.is_zero():
        return []
    norm = lux_norm if NormKind(kind) is NormKind.LUX else weak_norm
    nf = float(norm(phi1, f, precision).value)
    ng = float(norm(phi3, g, precision).value)
    return [
        max(phi1.evaluate(x / nf), phi3.evaluate(y / ng))
        for x, y in zip(f.values, g.values)
    ]


def holder_verify(
    phi1: YoungFunction,
    phi2: YoungFunction,
    phi3: YoungFunction,
    f: SimpleFunction,
    g: SimpleFunction,
    constant: float,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    """
    ||fg||_{w Phi2} <= 4 C ||f||_{w Phi1} ||g||_{w Phi3}, together with
    the atomwise bound Phi2(FG / C) <= Phi1(F) + Phi3(G) for the normalized
    F = f / ||f|| and G = g / ||g||. The atomwise bound gets its slack in
    the constant.
    """
    norm_f = float(weak_norm(phi1, f, precision).value)
    norm_g = float(weak_norm(phi3, g, precision).value)
    lhs = float(weak_norm(phi2, f.multiply(g), precision).value)
    rhs = 4.0 * constant * norm_f * norm_g

    margins = [
        (
            within_slack(lhs, rhs, CHECK_SLACK),
            relative_slack(lhs, rhs),
        )
    ]
    atom_failures: list[int] = []
    if norm_f > 0.0 and norm_g > 0.0:
        loose = constant * (1.0 + CHECK_SLACK)
        for k, (x, y) in enumerate(zip(f.values, g.values)):
            big_f, big_g = x / norm_f, y / norm_g
            left = phi2.evaluate(big_f * big_g / loose)
            right = phi1.evaluate(big_f) + phi3.evaluate(big_g)
            ok = left <= right
            if not ok:
                atom_failures.append(k)
            margins.append((ok, relative_slack(left, right)))

    report = AuditReport.from_margins(
        "holder",
        margins,
        lhs=lhs,
        rhs=rhs,
        norm_f=norm_f,
        norm_g=norm_g,
        constant=constant,
        atom_failures=atom_failures,
    )
    if not report.passed:
        report.reasoning = (
            f"atomwise bound fails at atoms {atom_failures}"
            if atom_failures
            else f"||fg|| = {lhs!r} exceeds 4C||f||||g|| = {rhs!r}"
        )
    return report


def lux_holder_verify(
    phi1: YoungFunction,
    phi2: YoungFunction,
    phi3: YoungFunction,
    f: SimpleFunction,
    g: SimpleFunction,
    constant: float,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    """||fg||_{L Phi2} <= 2 C ||f||_{L Phi1} ||g||_{L Phi3}."""
    norm_f = float(lux_norm(phi1, f, precision).value)
    norm_g = float(lux_norm(phi3, g, precision).value)
    lhs = float(lux_norm(phi2, f.multiply(g), precision).value)
    rhs = 2.0 * constant * norm_f * norm_g
    return AuditReport.from_margins(
        "holder-lux",
        [
            (
                within_slack(lhs, rhs, CHECK_SLACK),
                relative_slack(lhs, rhs),
            )
        ],
        lhs=lhs,
        rhs=rhs,
        constant=constant,
    )
