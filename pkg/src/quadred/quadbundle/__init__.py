"""Graded quadratic forms over small bases: hyperbolic reduction,
discriminants, and node counting for the worked families."""

from .base import (GR24_PAIRS, PLUCKER_NAMES, Gr24Chart, ProjSpace,
                   ProjSpaceChart, QuadricInGr24, compose_plucker,
                   plucker_pfaffian)
from .discriminant import DiscriminantReport, discriminant
from .families import (FAMILY_DIRECTIONS, FAMILY_EXPECTED, FAMILY_NAMES,
                       generate_family)
from .form import (GradedQuadraticForm, IsotropicDirection, is_isotropic,
                   orthogonality_divisor)
from .io import form_from_json, form_to_json, load_form, save_form
from .nodes import FamilyCount, NodeReport, count_nodes, counted_family
from .reduce import (ChartFrameError, ChartReduction, ReductionResult,
                     extend_c4, extend_gm21, reduce_form)
from .verify import (DEMO_PAIRS, InvarianceReport, demo_pair,
                     verify_reduction_invariance)

__all__ = [
    "GR24_PAIRS", "PLUCKER_NAMES",
    "Gr24Chart", "ProjSpace", "ProjSpaceChart", "QuadricInGr24",
    "compose_plucker", "plucker_pfaffian",
    "DiscriminantReport", "discriminant",
    "FAMILY_DIRECTIONS", "FAMILY_EXPECTED", "FAMILY_NAMES", "generate_family",
    "GradedQuadraticForm", "IsotropicDirection", "is_isotropic",
    "orthogonality_divisor",
    "form_from_json", "form_to_json", "load_form", "save_form",
    "FamilyCount", "NodeReport", "count_nodes", "counted_family",
    "ChartFrameError", "ChartReduction", "ReductionResult",
    "extend_c4", "extend_gm21", "reduce_form",
    "DEMO_PAIRS", "InvarianceReport", "demo_pair",
    "verify_reduction_invariance",
]
