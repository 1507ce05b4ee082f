from __future__ import annotations

import numpy as np

from ...norms import homogeneity_audit
from ...types import AuditReport, CampaignConfig, NormKind, Precision
from ..generators import WEIGHT_EXPONENTS, log_uniform
from .base_check import BaseCheck, Case


class HomogeneityCheck(BaseCheck):
    name = "homogeneity"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        phi = self.young(rng, config)
        return {
            "phi": phi,
            "f": self.function(rng, config, phi),
            "c": log_uniform(rng, WEIGHT_EXPONENTS),
            "kind": NormKind.LUX if rng.random() < 0.5 else NormKind.WEAK,
        }

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        return homogeneity_audit(
            case["phi"],
            case["f"],
            case["c"],
            case["kind"],
            precision,
        )
