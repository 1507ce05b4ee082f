from __future__ import annotations

from ..measure import SimpleFunction
from ..norms import weak_norm
from ..types import (
    DEFAULT_PRECISION,
    WITNESS_SLACK,
    AuditReport,
    Precision,
    UGrid,
    relative_slack,
    within_slack,
)
from ..young import YoungFunction
from .constants import Direction, estimate_constants
from .pwm import pwm_search
from .witness import converse_witness


def sandwich_audit(
    phi1: YoungFunction,
    phi2: YoungFunction,
    phi3: YoungFunction,
    g: SimpleFunction,
    grid: UGrid = UGrid(),
    budget: int = 2000,
    seed: int = 0,
    delta: float = 0.9,
    precision: Precision = DEFAULT_PRECISION,
) -> AuditReport:
    """
    ||g||_{w Phi3} / C_lower <= ||g||_PWM <= 4 C_upper ||g||_{w Phi3}.

    The estimate is the brute-force search seeded with the witness; the
    upper side is checked as no tested f violating it, the lower side as
    the witness reaching it (delta^2 weaker when a Y3 function is
    involved).
    """
    constants = estimate_constants(
        phi1, phi2, phi3, grid, precision
    )
    c_upper = constants.require_bounded(Direction.UPPER)
    c_lower = constants.require_bounded(Direction.LOWER)

    if g.is_zero():
        return AuditReport.ok(
            "sandwich",
            estimate=0.0,
            c_upper=c_upper,
            c_lower=c_lower,
        )

    report = converse_witness(
        phi1, phi2, phi3, g, c_lower, delta, precision
    )
    c_lower = report.constant

    estimate = max(
        pwm_search(
            phi1,
            phi2,
            g,
            budget=budget,
            seed=seed,
            extra_seeds=[report.h],
            precision=precision,
        ).value,
        report.lower_bound,
    )
    norm_g = float(weak_norm(phi3, g, precision).value)
    upper = 4.0 * c_upper * norm_g
    lower = report.target

    margins = [
        (
            within_slack(estimate, upper, WITNESS_SLACK),
            relative_slack(estimate, upper),
        ),
        (
            estimate >= lower * (1.0 - WITNESS_SLACK),
            relative_slack(lower, estimate),
        ),
    ]
    result = AuditReport.from_margins(
        "sandwich",
        margins,
        estimate=estimate,
        lower=lower,
        upper=upper,
        norm_g=norm_g,
        c_upper=c_upper,
        c_lower=c_lower,
        witness_norm_h=report.norm_h,
        witness_norm_hg=report.norm_hg,
        delta=report.delta,
    )
    if not result.passed:
        result.reasoning = (
            f"estimate {estimate!r} outside [{lower!r}, {upper!r}]"
        )
    return result
