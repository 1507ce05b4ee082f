from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, ClassVar, Optional

import numpy as np

from ...measure import SimpleFunction
from ...types import AuditReport, CampaignConfig, Precision, YoungClass
from ...young import PiecewiseLinear, YoungFunction
from ..generators import (
    draw_class,
    gen_simple,
    gen_space,
    gen_young,
    is_boundary_case,
)

Case = dict[str, Any]


class BaseCheck(ABC):
    """
    One campaign check. generate draws a case from the case stream;
    verify is deterministic in the case, so a failing case can be run
    again at a tighter precision.
    """

    name: ClassVar[str]

    @abstractmethod
    def generate(
        self, rng: np.random.Generator, config: CampaignConfig
    ) -> Case: ...

    @abstractmethod
    def verify(
        self,
        case: Case,
        config: CampaignConfig,
        precision: Precision,
    ) -> AuditReport: ...

    def is_boundary(self, case: Case) -> bool:
        phi, f = case.get("phi"), case.get("f")
        if phi is None or f is None:
            return False
        return is_boundary_case(phi, f)

    # =========================================================================
    # SHARED DRAWS
    # =========================================================================

    @staticmethod
    def young(
        rng: np.random.Generator,
        config: CampaignConfig,
        allowed: Optional[tuple[YoungClass, ...]] = None,
    ) -> PiecewiseLinear:
        young_class = draw_class(rng, config.class_mix, allowed)
        return gen_young(
            rng, config.max_segments, young_class=young_class
        )

    @staticmethod
    def function(
        rng: np.random.Generator,
        config: CampaignConfig,
        phi: Optional[YoungFunction] = None,
    ) -> SimpleFunction:
        space = gen_space(rng, config.max_atoms)
        return gen_simple(rng, space, phi)

    @staticmethod
    def pair(
        rng: np.random.Generator,
        config: CampaignConfig,
        phi_f: Optional[YoungFunction] = None,
        phi_g: Optional[YoungFunction] = None,
    ) -> tuple[SimpleFunction, SimpleFunction]:
        """Two functions on one space."""
        space = gen_space(rng, config.max_atoms)
        return (
            gen_simple(rng, space, phi_f),
            gen_simple(rng, space, phi_g),
        )
