from __future__ import annotations

import numpy as np

from ...norms import normalization_audit
from ...types import (
    CHECK_SLACK,
    AuditReport,
    CampaignConfig,
    Precision,
    YoungClass,
)
from .base_check import BaseCheck, Case


class NormalizationCheck(BaseCheck):
    """sup_t Phi(t) mu(f / ||f||_w, t) = 1 for Phi in Y1 or Y2."""

    name = "normalization"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        phi = self.young(
            rng, config, (YoungClass.Y1, YoungClass.Y2)
        )
        return {"phi": phi, "f": self.function(rng, config, phi)}

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        residual = normalization_audit(
            case["phi"], case["f"], precision
        )
        report = AuditReport.from_margins(
            "normalization",
            [(residual <= CHECK_SLACK, CHECK_SLACK - residual)],
            residual=residual,
        )
        if not report.passed:
            report.reasoning = f"residual {residual!r}"
        return report
