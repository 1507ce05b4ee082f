from __future__ import annotations

import numpy as np

from ...norms import fatou_audit
from ...types import AuditReport, CampaignConfig, Precision
from .base_check import BaseCheck, Case

MAX_STAGES = 8


class FatouCheck(BaseCheck):
    name = "fatou"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        phi = self.young(rng, config)
        return {
            "phi": phi,
            "f": self.function(rng, config, phi),
            "stages": int(rng.integers(2, MAX_STAGES + 1)),
        }

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        return fatou_audit(
            case["phi"], case["f"], case["stages"], precision
        )
