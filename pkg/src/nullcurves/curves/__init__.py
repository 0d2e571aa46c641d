"""Projective curves, ramification divisors and the Klein correspondence."""

from .divisor import Divisor, coprime_base
from .projective import (CurveError, ProjectiveCurve, apply_linear, associated_curve,
                         content_and_primitive, is_nondegenerate, normalize_projective,
                         projectively_equal, reparametrize)
from .ramification import (ramification_degrees, ramification_divisor, wedge_data,
                           wedge_degree_formula)
from .klein import (PLUCKER_INDEX, PLUCKER_LABELS, QuadricForm, SymplecticStructure,
                    apply_matrix, exterior_square, inverse_klein, is_contact, klein_dual,
                    plucker_report, standard_quadric_map, standard_quadric_value,
                    symplectic_basis)

__all__ = [
    "Divisor", "coprime_base", "CurveError", "ProjectiveCurve", "apply_linear",
    "associated_curve", "content_and_primitive", "is_nondegenerate",
    "normalize_projective", "projectively_equal", "reparametrize",
    "ramification_degrees", "ramification_divisor", "wedge_data",
    "wedge_degree_formula", "PLUCKER_INDEX", "PLUCKER_LABELS", "QuadricForm",
    "SymplecticStructure", "apply_matrix", "exterior_square", "inverse_klein",
    "is_contact", "klein_dual", "plucker_report", "standard_quadric_map",
    "standard_quadric_value", "symplectic_basis",
]
