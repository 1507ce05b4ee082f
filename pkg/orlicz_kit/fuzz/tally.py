from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class CheckTally:
    """Running pass/fail counts for one check."""

    passed: int = 0
    failed: int = 0
    rechecked: int = 0
    boundary_cases: int = 0
    worst_slack: float = math.inf
    worst_case: Optional[int] = None

    @property
    def cases(self) -> int:
        return self.passed + self.failed

    def record(
        self,
        case_index: int,
        passed: bool,
        slack: float,
        rechecked: bool = False,
        boundary: bool = False,
    ) -> None:
        if passed:
            self.passed += 1
        else:
            self.failed += 1
        if rechecked:
            self.rechecked += 1
        if boundary:
            self.boundary_cases += 1
        if slack < self.worst_slack or self.worst_case is None:
            self.worst_slack = slack
            self.worst_case = case_index


@dataclass
class CampaignTally:
    by_check: dict[str, CheckTally] = field(default_factory=dict)
    start_time: float = field(default_factory=time.perf_counter)

    def check(self, name: str) -> CheckTally:
        return self.by_check.setdefault(name, CheckTally())

    @property
    def failures(self) -> int:
        return sum(t.failed for t in self.by_check.values())

    @property
    def elapsed_seconds(self) -> float:
        return time.perf_counter() - self.start_time
