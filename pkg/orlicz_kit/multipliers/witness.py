"""
Extremal test functions for the converse Hölder bound.

For g != 0 let G = Phi3(|g| / ||g||_{w Phi3}) and h = Phi1^-1(G) where
0 < G < inf, else 0. Then ||h||_{w Phi1} <= 1, and with Phi2, Phi3 in
Y1 or Y2 and a lower constant C, ||hg||_{w Phi2} >= ||g||_{w Phi3} / C.
When Phi2 or Phi3 is Y3 each such function is replaced by its Y2
envelope, which costs a factor delta^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from ..exceptions import YoungClassError, ZeroFunctionError
from ..measure import SimpleFunction
from ..norms import weak_norm
from ..types import (
    CHECK_SLACK,
    DEFAULT_PRECISION,
    EXACT_SLACK,
    WITNESS_SLACK,
    AuditReport,
    Precision,
    YoungClass,
    relative_slack,
    within_slack,
)
from ..young import YoungFunction, envelope_y2
from .constants import Direction, validate_constant


@dataclass(frozen=True)
class WitnessReport:
    h: SimpleFunction
    norm_h: float
    norm_hg: float
    lower_bound: float
    slack: float
    target: float
    norm_g: float
    constant: float
    pointwise_ok: bool
    passed: bool
    levels: tuple[float, ...] = field(default=())
    delta: Optional[float] = None

    def to_audit(self) -> AuditReport:
        report = AuditReport(
            check="witness",
            passed=self.passed,
            worst_slack=(
                self.slack if self.passed else min(self.slack, 0.0)
            ),
            details={
                "norm_h": self.norm_h,
                "norm_hg": self.norm_hg,
                "target": self.target,
                "norm_g": self.norm_g,
                "constant": self.constant,
                "pointwise_ok": self.pointwise_ok,
                "delta": self.delta,
            },
        )
        if not self.passed:
            report.reasoning = (
                "pointwise identities fail"
                if not self.pointwise_ok
                else f"||hg|| = {self.norm_hg!r} below {self.target!r}"
                f" or ||h|| = {self.norm_h!r} off 1"
            )
        return report


@dataclass(frozen=True)
class WitnessFunction:
    h: SimpleFunction
    levels: tuple[float, ...]
    norm_g: float


def witness_function(
    phi1: YoungFunction,
    phi3: YoungFunction,
    g: SimpleFunction,
    precision: Precision = DEFAULT_PRECISION,
) -> WitnessFunction:
    """h = Phi1^-1(G) with G = Phi3(|g| / ||g||); G are the levels."""
    if g.is_zero():
        raise ZeroFunctionError()
    norm_g = float(weak_norm(phi3, g, precision).value)
    levels = tuple(phi3.evaluate(y / norm_g) for y in g.values)
    h = g.with_values(
        phi1.inverse(level, precision)
        if 0.0 < level < math.inf
        else 0.0
        for level in levels
    )
    return WitnessFunction(h=h, levels=levels, norm_g=norm_g)


def _require_not_y3(*phis: YoungFunction):
    for phi in phis:
        actual = phi.classify()
        if actual is YoungClass.Y3:
            raise YoungClassError(
                actual,
                "Y1 or Y2",
                hint="use witness_y3 for Y3 targets",
            )


def witness(
    phi1: YoungFunction,
    phi2: YoungFunction,
    phi3: YoungFunction,
    g: SimpleFunction,
    constant: float,
    precision: Precision = DEFAULT_PRECISION,
) -> WitnessReport:
    _require_not_y3(phi2, phi3)
    built = witness_function(phi1, phi3, g, precision)
    return _assess(phi1, phi2, built, g, constant, precision)


def _assess(
    phi1: YoungFunction,
    phi2: YoungFunction,
    built: WitnessFunction,
    g: SimpleFunction,
    constant: float,
    precision: Precision,
) -> WitnessReport:
    h, levels, norm_g = built.h, built.levels, built.norm_g

    pointwise_ok = any(level > 0.0 for level in levels)
    loose = constant * (1.0 + CHECK_SLACK)
    for x, y, level in zip(h.values, g.values, levels):
        if not within_slack(phi1.evaluate(x), level, EXACT_SLACK):
            pointwise_ok = False
        if level > 0.0:
            image = phi2.evaluate(loose * x * y / norm_g)
            if image < level * (1.0 - CHECK_SLACK):
                pointwise_ok = False

    norm_h = float(weak_norm(phi1, h, precision).value)
    norm_hg = float(
        weak_norm(phi2, h.multiply(g), precision).value
    )
    target = norm_g / constant
    lower_bound = norm_hg / norm_h if norm_h > 0.0 else 0.0

    passed = (
        pointwise_ok
        and within_slack(norm_h, 1.0, CHECK_SLACK)
        and norm_hg >= target * (1.0 - WITNESS_SLACK)
    )
    return WitnessReport(
        h=h,
        norm_h=norm_h,
        norm_hg=norm_hg,
        lower_bound=lower_bound,
        slack=relative_slack(target, norm_hg),
        target=target,
        norm_g=norm_g,
        constant=constant,
        pointwise_ok=pointwise_ok,
        passed=passed,
        levels=levels,
    )


def witness_y3(
    phi1: YoungFunction,
    phi2: YoungFunction,
    phi3: YoungFunction,
    g: SimpleFunction,
    constant: float,
    delta: float,
    precision: Precision = DEFAULT_PRECISION,
) -> WitnessReport:
    """
    Runs the witness on the Y2 envelopes with constant C / delta and
    measures ||hg|| in the original Phi2 against delta^2 ||g||_{w Phi3} / C.
    """
    class2, class3 = phi2.classify(), phi3.classify()
    if YoungClass.Y3 not in (class2, class3):
        raise YoungClassError(
            class2,
            "Y3 for Phi2 or Phi3",
            hint="use witness when neither is Y3",
        )
    psi2 = (
        envelope_y2(phi2, delta)
        if class2 is YoungClass.Y3
        else phi2
    )
    psi3 = (
        envelope_y2(phi3, delta)
        if class3 is YoungClass.Y3
        else phi3
    )

    built = witness_function(phi1, psi3, g, precision)
    inner = _assess(
        phi1, psi2, built, g, constant / delta, precision
    )

    norm_hg = float(
        weak_norm(phi2, built.h.multiply(g), precision).value
    )
    norm_g = float(weak_norm(phi3, g, precision).value)
    target = delta * delta * norm_g / constant
    lower_bound = (
        norm_hg / inner.norm_h if inner.norm_h > 0.0 else 0.0
    )
    passed = (
        inner.pointwise_ok
        and within_slack(inner.norm_h, 1.0, CHECK_SLACK)
        and norm_hg >= target * (1.0 - WITNESS_SLACK)
    )
    return WitnessReport(
        h=built.h,
        norm_h=inner.norm_h,
        norm_hg=norm_hg,
        lower_bound=lower_bound,
        slack=relative_slack(target, norm_hg),
        target=target,
        norm_g=norm_g,
        constant=constant,
        pointwise_ok=inner.pointwise_ok,
        passed=passed,
        levels=built.levels,
        delta=delta,
    )


def witness_levels(
    phi1: YoungFunction,
    phi3: YoungFunction,
    g: SimpleFunction,
    delta: float = 0.9,
    precision: Precision = DEFAULT_PRECISION,
) -> list[float]:
    """The u values a witness for g relies on, envelope levels included."""
    levels = list(witness_function(phi1, phi3, g, precision).levels)
    if phi3.classify() is YoungClass.Y3:
        psi3 = envelope_y2(phi3, delta)
        levels += witness_function(phi1, psi3, g, precision).levels
    return levels


def converse_witness(
    phi1: YoungFunction,
    phi2: YoungFunction,
    phi3: YoungFunction,
    g: SimpleFunction,
    constant: float,
    delta: float = 0.9,
    precision: Precision = DEFAULT_PRECISION,
) -> WitnessReport:
    """
    witness, or witness_y3 when Phi2 or Phi3 is Y3, with the lower
    constant first raised to cover every level the witness touches.
    """
    constant = validate_constant(
        phi1,
        phi2,
        phi3,
        Direction.LOWER,
        constant,
        witness_levels(phi1, phi3, g, delta, precision),
        precision,
    )
    if YoungClass.Y3 in (phi2.classify(), phi3.classify()):
        return witness_y3(
            phi1, phi2, phi3, g, constant, delta, precision
        )
    return witness(phi1, phi2, phi3, g, constant, precision)
