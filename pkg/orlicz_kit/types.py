"""
Orlicz Kit - shared types

Enumerations, numeric precision settings and the generic audit report
that every check in the kit returns. Domain values with richer structure
(YoungFunction, SimpleFunction, NormResult, TripleConstant, ...) live next
to the code that builds them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Optional

import numpy as np

from .exceptions import InvalidDescriptorError

# =============================================================================
# TOLERANCES
# =============================================================================

INVERSE_RTOL = 1e-12
MAX_ITERATIONS = 200
CHECK_SLACK = 1e-9
WITNESS_SLACK = 1e-6
EXACT_SLACK = 1e-12


@dataclass(frozen=True)
class Precision:
    """Tolerances for the numeric inner loops."""

    inverse_rtol: float = INVERSE_RTOL
    max_iterations: int = MAX_ITERATIONS

    def tightened(self, factor: float = 10.0) -> Precision:
        return replace(
            self,
            inverse_rtol=self.inverse_rtol / factor,
            max_iterations=self.max_iterations * 2,
        )


DEFAULT_PRECISION = Precision()


@dataclass(frozen=True)
class UGrid:
    """Log-spaced grid of u values in [u_min, u_max]."""

    u_min: float = 1e-9
    u_max: float = 1e9
    count: int = 2001

    def __post_init__(self):
        if not (0.0 < self.u_min < math.inf):
            raise InvalidDescriptorError(
                "u_grid.u_min", "must be finite and positive"
            )
        if not (self.u_min < self.u_max < math.inf):
            raise InvalidDescriptorError(
                "u_grid.u_max",
                "must be finite and above u_min",
            )
        if int(self.count) != self.count or self.count < 2:
            raise InvalidDescriptorError(
                "u_grid.count", "must be an integer >= 2"
            )

    @property
    def decades(self) -> float:
        return math.log10(self.u_max) - math.log10(self.u_min)

    @property
    def points_per_decade(self) -> float:
        return (self.count - 1) / self.decades

    def points(self) -> list[float]:
        return np.logspace(
            math.log10(self.u_min),
            math.log10(self.u_max),
            int(self.count),
        ).tolist()

    def extended(self, decades: float) -> UGrid:
        """Same spacing, widened by ``decades`` on each side."""
        extra = int(round(2 * decades * self.points_per_decade))
        return UGrid(
            u_min=self.u_min / 10.0**decades,
            u_max=self.u_max * 10.0**decades,
            count=int(self.count) + extra,
        )


CAMPAIGN_GRID = UGrid(1e-6, 1e6, 121)


def within_slack(
    lhs: float, rhs: float, rel: float
) -> bool:
    """lhs <= rhs * (1 + rel) on [0, inf]."""
    if math.isinf(rhs):
        return True
    if math.isinf(lhs):
        return False
    return lhs <= rhs * (1.0 + rel)


def relative_slack(lhs: float, rhs: float) -> float:
    """Signed margin of lhs <= rhs, relative to the larger side."""
    if lhs == rhs:
        return 0.0
    if math.isinf(rhs):
        return math.inf
    if math.isinf(lhs):
        return -math.inf
    scale = max(abs(lhs), abs(rhs))
    return (rhs - lhs) / scale


def relative_gap(x: float, y: float) -> float:
    """|x - y| relative to the larger value; 0 when both are equal (incl. inf)."""
    if x == y:
        return 0.0
    if math.isinf(x) or math.isinf(y):
        return math.inf
    return abs(x - y) / max(abs(x), abs(y))


# =============================================================================
# YOUNG FUNCTION CLASSES
# =============================================================================


class YoungClass(str, Enum):
    """
    Y1: b = inf.
    Y2: b < inf and Phi(b) = inf.
    Y3: b < inf and Phi(b) < inf.
    """

    Y1 = "Y1"
    Y2 = "Y2"
    Y3 = "Y3"


# =============================================================================
# NORMS
# =============================================================================


class NormKind(str, Enum):
    WEAK = "weak"
    LUX = "lux"


class NormMethod(str, Enum):
    PREDICATE_BISECTION = "predicate-bisection"
    ROOT_EQUATION = "root-equation"
    CLOSED_FORM = "closed-form"


# =============================================================================
# AUDIT REPORTS - what every check returns
# =============================================================================


@dataclass
class AuditReport:
    """
    Outcome of one mathematical check.

    worst_slack is the smallest relative margin seen over everything the
    check compared; negative means violated.
    """

    check: str
    passed: bool
    worst_slack: float = math.inf
    details: dict[str, Any] = field(
        default_factory=dict
    )
    reasoning: Optional[str] = None

    @classmethod
    def ok(
        cls,
        check: str,
        worst_slack: float = math.inf,
        reasoning: Optional[str] = None,
        **details: Any,
    ) -> AuditReport:
        return cls(
            check=check,
            passed=True,
            worst_slack=worst_slack,
            details=details,
            reasoning=reasoning,
        )

    @classmethod
    def violated(
        cls,
        check: str,
        reasoning: str,
        worst_slack: float = -math.inf,
        **details: Any,
    ) -> AuditReport:
        return cls(
            check=check,
            passed=False,
            worst_slack=worst_slack,
            details=details,
            reasoning=reasoning,
        )

    @classmethod
    def from_margins(
        cls,
        check: str,
        margins: list[tuple[bool, float]],
        reasoning: Optional[str] = None,
        **details: Any,
    ) -> AuditReport:
        passed = all(ok for ok, _ in margins)
        worst = min(
            (slack for _, slack in margins),
            default=math.inf,
        )
        return cls(
            check=check,
            passed=passed,
            worst_slack=worst,
            details=details,
            reasoning=reasoning,
        )


# =============================================================================
# CAMPAIGNS
# =============================================================================

CORE_CHECKS: tuple[str, ...] = (
    "holder",
    "witness",
    "sandwich",
    "norms-equivalence",
    "lattice",
    "fatou",
    "quasi-triangle",
)

EXTRA_CHECKS: tuple[str, ...] = (
    "normalization",
    "le1",
    "embedding",
    "homogeneity",
    "lux-triangle",
    "monotone-limit",
    "holder-lux",
    "inverse-laws",
)

ALL_CHECKS: tuple[str, ...] = CORE_CHECKS + EXTRA_CHECKS


def _default_class_mix() -> dict[YoungClass, float]:
    return {
        YoungClass.Y1: 0.4,
        YoungClass.Y2: 0.3,
        YoungClass.Y3: 0.3,
    }


@dataclass
class CampaignConfig:
    """Configuration for a seeded fuzz campaign."""

    seed: int = 1
    cases: int = 100
    max_atoms: int = 6
    max_segments: int = 8
    class_mix: dict[YoungClass, float] = field(
        default_factory=_default_class_mix
    )
    u_grid: UGrid = CAMPAIGN_GRID
    checks: tuple[str, ...] = CORE_CHECKS

    # witness_y3 envelope parameter
    delta: float = 0.9
    # objective evaluations per sandwich case
    pwm_budget: int = 200

    # None defers to ORLICZ_KIT_THREADS, then 1
    threads: Optional[int] = None
