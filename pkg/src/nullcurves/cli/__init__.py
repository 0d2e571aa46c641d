"""Command-line front end."""

from .main import EXIT_CODES, build_parser, dispatch, main, render_json, render_text
from .serialize import (InputError, curve_to_json, parse_curve, parse_weierstrass,
                        read_json, same_weierstrass, weierstrass_to_json)

__all__ = [
    "EXIT_CODES", "build_parser", "dispatch", "main", "render_json", "render_text",
    "InputError", "curve_to_json", "parse_curve", "parse_weierstrass", "read_json",
    "same_weierstrass", "weierstrass_to_json",
]
