from __future__ import annotations

import numpy as np

from ...norms import le1_audit
from ...types import AuditReport, CampaignConfig, Precision
from .base_check import BaseCheck, Case


class Le1Check(BaseCheck):
    """sup_u u mu(Phi(|f| / ||f||_w), u) <= 1 for every class."""

    name = "le1"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        phi = self.young(rng, config)
        return {"phi": phi, "f": self.function(rng, config, phi)}

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        if le1_audit(case["phi"], case["f"], precision):
            return AuditReport.ok("le1")
        return AuditReport.violated(
            "le1", "modular of the normalized function exceeds 1"
        )
