"""Luxemburg norms, weak quasi-norms and the identities around them."""

from __future__ import annotations

from .audits import (
    embedding_audit,
    fatou_audit,
    le1_audit,
    normalization_audit,
    sup_forms_audit,
)
from .axioms import (
    NORM_ENGINES,
    homogeneity_audit,
    lattice_audit,
    lux_triangle_audit,
    norm_of,
    quasi_triangle_audit,
    rescaling_audit,
)
from .luxemburg import lux_norm
from .modular import lux_modular
from .result import NormResult
from .sup_forms import (
    form2_grid_lower_bound,
    weak_sup_form1,
    weak_sup_form2,
    weak_sup_form3,
)
from .weak import closed_form_weak_norm, weak_norm

__all__ = [
    "NORM_ENGINES",
    "NormResult",
    "closed_form_weak_norm",
    "embedding_audit",
    "fatou_audit",
    "form2_grid_lower_bound",
    "homogeneity_audit",
    "lattice_audit",
    "le1_audit",
    "lux_modular",
    "lux_norm",
    "lux_triangle_audit",
    "norm_of",
    "normalization_audit",
    "quasi_triangle_audit",
    "rescaling_audit",
    "sup_forms_audit",
    "weak_norm",
    "weak_sup_form1",
    "weak_sup_form2",
    "weak_sup_form3",
]
