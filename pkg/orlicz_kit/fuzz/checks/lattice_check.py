from __future__ import annotations

import numpy as np

from ...measure import lattice_pairs
from ...norms import lattice_audit
from ...types import AuditReport, CampaignConfig, Precision
from .base_check import BaseCheck, Case


class LatticeCheck(BaseCheck):
    name = "lattice"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        phi = self.young(rng, config)
        f = self.function(rng, config, phi)
        factors = rng.random(len(f.values)).tolist()
        h, _ = lattice_pairs(f, 0, factors)
        return {"phi": phi, "h": h, "f": f}

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        return lattice_audit(
            case["phi"], case["h"], case["f"], precision
        )
