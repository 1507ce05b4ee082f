"""
Campaign orchestration.

Cases are drawn from per-case Philox streams and run on a thread pool;
results are collected in case order, so the report does not depend on the
thread count. A failing case is verified once more at a tightened
precision before it becomes a counterexample.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Any, Optional

from ..exceptions import (
    InvalidDescriptorError,
    NoChecksSelectedError,
    OrliczKitError,
)
from ..logging import get_logger
from ..serialization import ReportSerializer, dumps_json
from ..types import (
    DEFAULT_PRECISION,
    AuditReport,
    CampaignConfig,
    Precision,
)
from .checks import BaseCheck, Case, CheckRegistry
from .config_validator import MIX_RTOL
from .rng import ALGORITHM_ID, case_rng, validate_seed
from .tally import CampaignTally

logger = get_logger("fuzz.campaign")

THREADS_ENV = "ORLICZ_KIT_THREADS"


@dataclass(frozen=True)
class CounterexampleRecord:
    check: str
    seed: int
    case_index: int
    inputs: dict[str, Any]
    report: AuditReport
    first_slack: float

    @property
    def file_name(self) -> str:
        return f"{self.check}-{self.seed}-{self.case_index:06d}.json"


@dataclass(frozen=True)
class CheckOutcome:
    check: str
    passed: int
    failed: int
    rechecked: int
    worst_slack: float
    worst_case: Optional[int]
    boundary_cases: int = 0

    @property
    def cases(self) -> int:
        return self.passed + self.failed


@dataclass
class CampaignReport:
    config: CampaignConfig
    outcomes: list[CheckOutcome]
    counterexamples: list[CounterexampleRecord] = field(
        default_factory=list
    )
    algorithm: str = ALGORITHM_ID
    # shown in summaries, never persisted
    wall_time_s: float = 0.0

    @property
    def failures(self) -> int:
        return sum(o.failed for o in self.outcomes)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def outcome(self, check: str) -> CheckOutcome:
        for outcome in self.outcomes:
            if outcome.check == check:
                return outcome
        raise KeyError(check)


@dataclass(frozen=True)
class _CaseResult:
    case_index: int
    case: Case
    report: AuditReport
    first_slack: float
    rechecked: bool
    boundary: bool


# =============================================================================
# CONFIG
# =============================================================================


def resolve_threads(config: CampaignConfig) -> int:
    """config.threads, capped by ORLICZ_KIT_THREADS; 1 when neither is set."""
    cap: Optional[int] = None
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            cap = 0
        if cap < 1:
            raise InvalidDescriptorError(
                THREADS_ENV, f"must be a positive integer, got {raw!r}"
            )
    requested = config.threads or cap or 1
    return min(requested, cap) if cap else requested


def _selected_checks(
    config: CampaignConfig, registry: CheckRegistry
) -> list[str]:
    checks = sorted(set(config.checks))
    if not checks:
        raise NoChecksSelectedError()
    for name in checks:
        registry.get(name)
    validate_seed(config.seed)
    if config.cases < 1:
        raise InvalidDescriptorError("cases", "must be at least 1")
    if config.max_atoms < 1:
        raise InvalidDescriptorError("max_atoms", "must be at least 1")
    if config.max_segments < 1:
        raise InvalidDescriptorError(
            "max_segments", "must be at least 1"
        )
    if not 0.0 < config.delta < 1.0:
        raise InvalidDescriptorError(
            "delta", "must lie strictly in (0, 1)"
        )
    total = math.fsum(config.class_mix.values())
    if min(config.class_mix.values(), default=0.0) < 0.0 or not (
        math.isclose(total, 1.0, rel_tol=MIX_RTOL)
    ):
        raise InvalidDescriptorError(
            "class_mix", "probabilities must be nonnegative and sum to 1"
        )
    return checks


# =============================================================================
# RUNNING
# =============================================================================


def _verify(
    check: BaseCheck,
    case: Case,
    config: CampaignConfig,
    precision: Precision,
) -> AuditReport:
    try:
        return check.verify(case, config, precision)
    except (OrliczKitError, ArithmeticError, ValueError) as e:
        return AuditReport.violated(
            check.name, f"{type(e).__name__}: {e}"
        )


def _run_case(
    check: BaseCheck,
    check_index: int,
    case_index: int,
    config: CampaignConfig,
) -> _CaseResult:
    rng = case_rng(config.seed, check_index, case_index)
    case = check.generate(rng, config)
    report = _verify(check, case, config, DEFAULT_PRECISION)
    first_slack = report.worst_slack
    rechecked = not report.passed
    if rechecked:
        report = _verify(
            check, case, config, DEFAULT_PRECISION.tightened()
        )
    return _CaseResult(
        case_index=case_index,
        case=case,
        report=report,
        first_slack=first_slack,
        rechecked=rechecked,
        boundary=check.is_boundary(case),
    )


def run_campaign(
    config: CampaignConfig,
    report_path: Optional[Path | str] = None,
    corpus_dir: Optional[Path | str] = None,
) -> CampaignReport:
    registry = CheckRegistry()
    checks = _selected_checks(config, registry)
    threads = resolve_threads(config)
    serializer = ReportSerializer()
    tally = CampaignTally()

    logger.campaign_started(config.seed, config.cases, checks, threads)

    outcomes: list[CheckOutcome] = []
    counterexamples: list[CounterexampleRecord] = []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for name in checks:
            check = registry.get(name)
            index = registry.index_of(name)
            results = pool.map(
                partial(_run_case, check, index, config=config),
                range(config.cases),
            )

            check_tally = tally.check(name)
            for result in results:
                check_tally.record(
                    result.case_index,
                    result.report.passed,
                    result.report.worst_slack,
                    result.rechecked,
                    result.boundary,
                )
                if not result.report.passed:
                    counterexamples.append(
                        CounterexampleRecord(
                            check=name,
                            seed=config.seed,
                            case_index=result.case_index,
                            inputs=serializer.serialize_case(
                                result.case
                            ),
                            report=result.report,
                            first_slack=result.first_slack,
                        )
                    )

            outcomes.append(
                CheckOutcome(
                    check=name,
                    passed=check_tally.passed,
                    failed=check_tally.failed,
                    rechecked=check_tally.rechecked,
                    worst_slack=check_tally.worst_slack,
                    worst_case=check_tally.worst_case,
                    boundary_cases=check_tally.boundary_cases,
                )
            )
            logger.check_finished(
                name, check_tally.failed == 0, check_tally.worst_slack
            )

    report = CampaignReport(
        config=config,
        outcomes=outcomes,
        counterexamples=counterexamples,
        wall_time_s=tally.elapsed_seconds,
    )
    logger.campaign_finished(report.failures, report.wall_time_s)

    if corpus_dir is not None:
        write_corpus(report, corpus_dir)
    if report_path is not None:
        write_report(report, report_path)
    return report


# =============================================================================
# PERSISTENCE
# =============================================================================


def render_report(report: CampaignReport) -> str:
    return dumps_json(ReportSerializer().serialize_campaign(report))


def write_report(report: CampaignReport, path: Path | str) -> Path:
    resolved = Path(path)
    resolved.parent.mkdir(parents=True, exist_ok=True)
    resolved.write_text(render_report(report), encoding="utf-8")
    return resolved


def write_corpus(
    report: CampaignReport, directory: Path | str
) -> list[Path]:
    """One JSON file per counterexample, named check-seed-case."""
    serializer = ReportSerializer()
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    written = []
    for record in report.counterexamples:
        path = root / record.file_name
        path.write_text(
            dumps_json(serializer.serialize_counterexample(record)),
            encoding="utf-8",
        )
        logger.counterexample_recorded(
            record.check, record.case_index, str(path)
        )
        written.append(path)
    return written
