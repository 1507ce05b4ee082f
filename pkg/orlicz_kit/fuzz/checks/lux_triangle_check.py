from __future__ import annotations

import numpy as np

from ...norms import lux_triangle_audit
from ...types import AuditReport, CampaignConfig, Precision
from .base_check import BaseCheck, Case


class LuxTriangleCheck(BaseCheck):
    name = "lux-triangle"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        phi = self.young(rng, config)
        f, g = self.pair(rng, config, phi, phi)
        return {"phi": phi, "f": f, "g": g}

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        return lux_triangle_audit(
            case["phi"], case["f"], case["g"], precision
        )
