"""Univariate polynomials, parameter rings, rational functions."""

from .univariate import (INFINITY, Poly, content_gcd, gcd, gcdex, lcm, ord_at_place,
                         solve_bezout, squarefree_decomposition, squarefree_part)
from .params import ParamElement, ParamFraction, param_vars, variable_key
from .ratfunc import LogRemainder, RationalFunction, hermite_reduce, residue_free
from .wedge import column_subsets, derivative_rows, wedge_minors

__all__ = [
    "INFINITY", "Poly", "content_gcd", "gcd", "gcdex", "lcm", "ord_at_place",
    "solve_bezout", "squarefree_decomposition", "squarefree_part", "ParamElement",
    "ParamFraction", "param_vars", "variable_key", "LogRemainder",
    "RationalFunction", "hermite_reduce", "residue_free", "column_subsets",
    "derivative_rows", "wedge_minors",
]
