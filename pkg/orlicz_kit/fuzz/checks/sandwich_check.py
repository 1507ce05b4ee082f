from __future__ import annotations

import numpy as np

from ...multipliers import sandwich_audit
from ...types import AuditReport, CampaignConfig, Precision
from ..generators import gen_simple, gen_space, sandwich_triple
from ..rng import sub_seed
from .base_check import BaseCheck, Case


class SandwichCheck(BaseCheck):
    name = "sandwich"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        family, (phi1, phi2, phi3) = sandwich_triple(rng)
        space = gen_space(rng, max_atoms=3, min_atoms=2)
        return {
            "phi1": phi1,
            "phi2": phi2,
            "phi3": phi3,
            "g": gen_simple(rng, space),
            "search_seed": sub_seed(rng),
            "construction": family,
        }

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        return sandwich_audit(
            case["phi1"],
            case["phi2"],
            case["phi3"],
            case["g"],
            grid=config.u_grid,
            budget=config.pwm_budget,
            seed=case["search_seed"],
            delta=config.delta,
            precision=precision,
        )
