"""JSON input files and their exact round-trip.

Curve file:        {"field": F, "coords": [[c0, c1, ...], ...], "beta": 4x4}
Weierstrass file:  {"field": F, "g": {"num": [...], "den": [...]},
                    "omega": {"num": [...], "den": [...]}}

Coefficient lists are ascending; every entry is an exact literal.  "field" is
optional: when present the literals must live in that tower, otherwise the
smallest tower containing them is built.  "beta" is optional and defaults to
xi0^xi3 + xi1^xi2.
"""

import json
import sys

from ..exactnum import (QQ, LiteralContext, LiteralError, TowerError, element_literal,
                        parse_descriptor)
from ..poly import Poly, RationalFunction
from ..curves import CurveError, ProjectiveCurve, SymplecticStructure, content_and_primitive
from ..weier import WeierError, WeierstrassData, field_of


class InputError(ValueError):
    """Malformed input, with the file and location in the message."""


def read_json(path):
    """Load a JSON document from a path or "-" (stdin).

    A report envelope (as printed with --format json) is unwrapped to the
    input data it carries in payload.data.
    """
    name = "<stdin>" if path == "-" else path
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError("%s: %s" % (name, exc.strerror or exc)) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("%s:%d:%d: %s" % (name, exc.lineno, exc.colno, exc.msg)) from exc
    if isinstance(data, dict) and "schema_version" in data:
        inner = data.get("payload", {}).get("data")
        if inner is None:
            raise InputError("%s: report carries no input data" % name)
        data = inner
    if not isinstance(data, dict):
        raise InputError("%s: top level must be an object" % name)
    return name, data


# ---------------------------------------------------------------------------
# emit


def field_to_json(desc):
    return desc.to_json()


def poly_to_json(p):
    return [element_literal(c) for c in p.coeffs]


def ratfunc_to_json(r):
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def curve_to_json(curve, beta=None):
    out = {"field": field_to_json(field_of(*curve.coords)),
           "coords": [poly_to_json(c) for c in curve.coords]}
    if beta is not None:
        out["beta"] = beta.to_json()
    return out


def weierstrass_to_json(w):
    return {"field": field_to_json(field_of(w.gauss, w.form)),
            "g": ratfunc_to_json(w.gauss), "omega": ratfunc_to_json(w.form)}


# ---------------------------------------------------------------------------
# parse


class _Reader:
    """Parses literals into one tower, then coerces everything into it."""

    def __init__(self, name, data):
        self.name = name
        if "field" in data:
            try:
                desc = parse_descriptor(data["field"])
            except LiteralError as exc:
                raise InputError("%s: field: %s" % (name, exc)) from exc
            self.ctx = LiteralContext(desc, frozen=True)
        else:
            self.ctx = LiteralContext(QQ)

    def fail(self, where, msg):
        raise InputError("%s: %s: %s" % (self.name, where, msg))

    def literal(self, text, where):
        if not isinstance(text, (str, int)):
            self.fail(where, "expected a literal string")
        try:
            return self.ctx.parse(str(text))
        except (LiteralError, TowerError, ZeroDivisionError) as exc:
            self.fail(where, str(exc))

    def coeff_list(self, raw, where):
        if not isinstance(raw, list):
            self.fail(where, "expected a list of coefficients")
        return [self.literal(x, "%s[%d]" % (where, k)) for k, x in enumerate(raw)]

    def finish(self, x):
        x = self.ctx.desc.coerce(x)
        return x.to_fraction() if self.ctx.desc == QQ else x

    def poly(self, coeffs):
        return Poly([self.finish(c) for c in coeffs])


def parse_curve(name, data, notices=None):
    """(ProjectiveCurve, SymplecticStructure) from a curve document.

    A common polynomial factor of the coordinates is divided out; a notice
    is appended to `notices` when that happens.
    """
    rd = _Reader(name, data)
    raw = data.get("coords")
    if not isinstance(raw, list) or not raw:
        rd.fail("coords", "expected a non-empty list of coefficient lists")
    coeffs = [rd.coeff_list(c, "coords[%d]" % k) for k, c in enumerate(raw)]
    beta_raw = data.get("beta")
    beta_vals = None
    if beta_raw is not None:
        if not isinstance(beta_raw, list) or len(beta_raw) != 4:
            rd.fail("beta", "expected a 4x4 matrix")
        beta_vals = []
        for i, row in enumerate(beta_raw):
            if not isinstance(row, list) or len(row) != 4:
                rd.fail("beta[%d]" % i, "expected 4 entries")
            beta_vals.append([rd.literal(x, "beta[%d][%d]" % (i, j)) for j, x in enumerate(row)])
    polys = [rd.poly(c) for c in coeffs]
    try:
        g, prim = content_and_primitive(polys)
        if g.degree > 0 and notices is not None:
            notices.append("divided the coordinates by their common factor %s" % g.to_string())
        curve = ProjectiveCurve(prim)
        if beta_vals is None:
            beta = SymplecticStructure.standard()
        else:
            beta = SymplecticStructure([[rd.finish(x) for x in row] for row in beta_vals])
    except CurveError as exc:
        rd.fail("coords" if beta_vals is None else "coords/beta", str(exc))
    return curve, beta


def parse_weierstrass(name, data):
    rd = _Reader(name, data)
    parts = {}
    for key in ("g", "omega"):
        obj = data.get(key)
        if not isinstance(obj, dict):
            rd.fail(key, "expected an object with num and den")
        num = rd.coeff_list(obj.get("num"), "%s.num" % key)
        den = rd.coeff_list(obj.get("den", ["1"]), "%s.den" % key)
        parts[key] = (num, den)
    try:
        fns = {}
        for key, (num, den) in parts.items():
            den_p = rd.poly(den)
            if not den_p:
                rd.fail("%s.den" % key, "zero denominator")
            fns[key] = RationalFunction(rd.poly(num), den_p)
        return WeierstrassData(fns["g"], fns["omega"])
    except WeierError as exc:
        rd.fail("g/omega", str(exc))


def same_weierstrass(a, b):
    return a.gauss == b.gauss and a.form == b.form
