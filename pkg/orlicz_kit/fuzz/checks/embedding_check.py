from __future__ import annotations

import numpy as np

from ...norms import embedding_audit
from ...types import AuditReport, CampaignConfig, Precision
from .base_check import BaseCheck, Case


class EmbeddingCheck(BaseCheck):
    name = "embedding"

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
        return embedding_audit(case["phi"], case["f"], precision)
