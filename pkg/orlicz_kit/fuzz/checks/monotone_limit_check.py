from __future__ import annotations

import numpy as np

from ...measure import monotone_limit_audit
from ...types import AuditReport, CampaignConfig, Precision
from .base_check import BaseCheck, Case
from .fatou_check import MAX_STAGES


class MonotoneLimitCheck(BaseCheck):
    name = "monotone-limit"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        return {
            "f": self.function(rng, config),
            "stages": int(rng.integers(2, MAX_STAGES + 1)),
        }

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        return monotone_limit_audit(case["f"], case["stages"])
