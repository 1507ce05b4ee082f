"""
Orlicz Kit

Young functions, weak Orlicz quasi-norms and pointwise multipliers on
finite atomic measure spaces, computed exactly where possible and checked
by witnesses and seeded campaigns.

Quick Start:

    from orlicz_kit import Power, SimpleFunction, weak_norm, lux_norm

    f = SimpleFunction.from_pairs([(1, 2), (1, 1)])
    weak_norm(Power(1), f).value     # 2.0
    lux_norm(Power(1), f).value      # 3.0

CLI:

    orlicz-kit norm --young '{"family":"power","p":1}' \\
        --data '{"atoms":[{"weight":1,"value":2},{"weight":1,"value":1}]}'
    orlicz-kit constants --phi1 ... --phi2 ... --phi3 ...
    orlicz-kit fuzz --seed 1 --cases 100 --checks holder,witness
"""

__version__ = "0.1.0"

from .exceptions import (
    InvalidDescriptorError,
    InvalidValueError,
    NoChecksSelectedError,
    OrliczKitError,
    UnboundedOnGridError,
    YoungClassError,
    ZeroFunctionError,
)
from .fuzz import CampaignReport, run_campaign
from .logging import get_logger, setup_logging
from .measure import MeasureSpace, SimpleFunction, distribution
from .multipliers import (
    TripleConstant,
    WitnessReport,
    estimate_constants,
    holder_verify,
    pwm_bruteforce,
    witness,
    witness_y3,
)
from .norms import NormResult, lux_norm, weak_norm
from .types import (
    AuditReport,
    CampaignConfig,
    NormKind,
    NormMethod,
    Precision,
    UGrid,
    YoungClass,
)
from .xreal import INF, ExtReal
from .young import (
    ArgScale,
    ExpPower,
    FiniteB,
    LinfIndicator,
    PiecewiseLinear,
    Power,
    PowerLog,
    Slope,
    Sum,
    YoungFunction,
)

__all__ = [
    "__version__",
    # Errors
    "InvalidDescriptorError",
    "InvalidValueError",
    "NoChecksSelectedError",
    "OrliczKitError",
    "UnboundedOnGridError",
    "YoungClassError",
    "ZeroFunctionError",
    # Values and types
    "AuditReport",
    "CampaignConfig",
    "ExtReal",
    "INF",
    "NormKind",
    "NormMethod",
    "Precision",
    "UGrid",
    "YoungClass",
    # Young functions
    "ArgScale",
    "ExpPower",
    "FiniteB",
    "LinfIndicator",
    "PiecewiseLinear",
    "Power",
    "PowerLog",
    "Slope",
    "Sum",
    "YoungFunction",
    # Measure spaces and norms
    "MeasureSpace",
    "NormResult",
    "SimpleFunction",
    "distribution",
    "lux_norm",
    "weak_norm",
    # Multipliers
    "TripleConstant",
    "WitnessReport",
    "estimate_constants",
    "holder_verify",
    "pwm_bruteforce",
    "witness",
    "witness_y3",
    # Campaigns
    "CampaignReport",
    "run_campaign",
    # Logging
    "get_logger",
    "setup_logging",
]
