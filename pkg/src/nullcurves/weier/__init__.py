"""Weierstrass data, null curves, ends and the built-in families."""

from .nullcurve import (EndProfile, NullCurveData, WeierError, WeierstrassData,
                        classify_ends, complete_null_curve, curvature_and_jorge_meeks,
                        end_product_test, field_of, forms_from_data, integrate_null,
                        is_null_curve, pole_divisor, residues_vanish, verify_null)
from .families import (PENG_PRINTED_DECIMALS, fd_family, kusner_family,
                       peng_context, peng_default_params, peng_family)
from .refute import matches_printed_prefix, order_witness, refute_peng

__all__ = [
    "EndProfile", "NullCurveData", "WeierError", "WeierstrassData", "classify_ends",
    "complete_null_curve", "curvature_and_jorge_meeks", "end_product_test", "field_of",
    "forms_from_data", "integrate_null", "is_null_curve", "pole_divisor", "residues_vanish",
    "verify_null", "PENG_PRINTED_DECIMALS", "fd_family", "kusner_family", "peng_context",
    "peng_default_params", "peng_family", "matches_printed_prefix", "order_witness",
    "refute_peng",
]
