"""Exact numbers: rationals and quadratic towers, with certified signs."""

from .interval import Interval, round_significant
from .tower import (QQ, TowerDescriptor, TowerElement, TowerError, approximate,
                    exact_sqrt, render_complex, render_decimal, sign_of)
from .literal import (LiteralContext, LiteralError, element_literal, parse_descriptor,
                      parse_literal)

__all__ = [
    "Interval", "round_significant", "QQ", "TowerDescriptor", "TowerElement",
    "TowerError", "approximate", "exact_sqrt", "render_complex", "render_decimal",
    "sign_of", "LiteralContext", "LiteralError", "element_literal",
    "parse_descriptor", "parse_literal",
]
