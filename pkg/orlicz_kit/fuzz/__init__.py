"""Seeded generators, campaign checks and the campaign runner."""

from __future__ import annotations

from .campaign import (
    THREADS_ENV,
    CampaignReport,
    CheckOutcome,
    CounterexampleRecord,
    render_report,
    resolve_threads,
    run_campaign,
    write_corpus,
    write_report,
)
from .checks import BaseCheck, CheckRegistry
from .config_loader import CampaignConfigLoader, parse_checks
from .config_validator import CampaignConfigValidator
from .generators import (
    GeneratedTriple,
    exp_power_triple,
    gen_simple,
    gen_space,
    gen_young,
    holder_triple,
    is_boundary_case,
    power_log_triple,
    power_triple,
    sandwich_triple,
    witness_triple,
)
from .rng import ALGORITHM_ID, case_rng
from .tally import CampaignTally, CheckTally

__all__ = [
    "ALGORITHM_ID",
    "BaseCheck",
    "CampaignConfigLoader",
    "CampaignConfigValidator",
    "CampaignReport",
    "CampaignTally",
    "CheckOutcome",
    "CheckRegistry",
    "CheckTally",
    "CounterexampleRecord",
    "GeneratedTriple",
    "THREADS_ENV",
    "case_rng",
    "exp_power_triple",
    "gen_simple",
    "gen_space",
    "gen_young",
    "holder_triple",
    "is_boundary_case",
    "parse_checks",
    "power_log_triple",
    "power_triple",
    "render_report",
    "resolve_threads",
    "run_campaign",
    "sandwich_triple",
    "witness_triple",
    "write_corpus",
    "write_report",
]
