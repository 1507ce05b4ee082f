from __future__ import annotations

import math

import numpy as np

from ...types import AuditReport, CampaignConfig, Precision
from ...young import check_p1_p2_p3
from .base_check import BaseCheck, Case

SAMPLE_EXPONENTS = (-10.0, 10.0)
RANDOM_SAMPLES = 16


class InverseLawsCheck(BaseCheck):
    """Inverse laws at random points and at every breakpoint of Phi."""

    name = "inverse-laws"

    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case:
        phi = self.young(rng, config)
        lo, hi = SAMPLE_EXPONENTS
        samples = (2.0 ** rng.uniform(lo, hi, RANDOM_SAMPLES)).tolist()
        for t, y in phi.breakpoints:
            samples += [t, y]
        samples += [s for s in phi.endpoints() if math.isfinite(s)]
        return {"phi": phi, "samples": sorted(set(samples))}

    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport:
        return check_p1_p2_p3(case["phi"], case["samples"], precision)
