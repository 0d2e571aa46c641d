"""Argument parsing, dispatch and report rendering.

Every run prints one report {"schema_version", "subcommand", "verdict",
"payload"}.  Exit status: 0 for VERIFIED and OPEN, 2 for REFUTED and
CONTRADICTION, 1 for ERROR.
"""

import argparse
import json
import sys

from ..exactnum import LiteralError, TowerError
from ..curves import (CurveError, associated_curve, inverse_klein, is_contact,
                      is_nondegenerate, klein_dual, plucker_report, ramification_divisor,
                      wedge_degree_formula)
from ..classify import (OPEN_CASES, CertificateError, IndexConditionError,
                        admissible_shapes, builtin_certificate, builtin_certificates,
                        classify_pair, degree_report, index_condition, resolve_case)
from ..weier import (WeierError, classify_ends, complete_null_curve,
                     curvature_and_jorge_meeks, end_product_test, fd_family, forms_from_data,
                     integrate_null, kusner_family, peng_default_params, peng_family,
                     refute_peng, residues_vanish, verify_null)
from .serialize import (InputError, curve_to_json, parse_curve, parse_weierstrass,
                        read_json, weierstrass_to_json)

SCHEMA_VERSION = "1"
EXIT_CODES = {"VERIFIED": 0, "OPEN": 0, "REFUTED": 2, "CONTRADICTION": 2, "ERROR": 1}
SUBCOMMANDS = ("ramify", "klein", "inverse-klein", "plucker", "verify-ends", "complete",
               "enumerate", "classify-pair", "certify", "family", "refute-peng")


class UsageError(ValueError):
    """Invalid command line."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which would read as REFUTED
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="nullcurves", description="Exact computations with contact "
                "curves in P^3 and null curves in the Klein quadric.")
    sub = p.add_subparsers(dest="subcommand", parser_class=_Parser)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--format", choices=("json", "text"), default=None)
        return sp

    def add_input(sp, what):
        sp.add_argument("input", nargs="?", default="-",
                        help="%s file, or - for stdin (default)" % what)

    sp = add("ramify", "ramification divisors R_1 .. R_n of a curve")
    add_input(sp, "curve")
    sp = add("klein", "dual null curve of a contact curve")
    add_input(sp, "curve")
    sp = add("inverse-klein", "contact curve of a null curve in beta-perp coordinates")
    add_input(sp, "curve")
    sp = add("plucker", "Plucker identities of a contact curve and its dual")
    add_input(sp, "curve")
    sp = add("verify-ends", "residues, ends and end product of Weierstrass data")
    add_input(sp, "Weierstrass")
    sp.add_argument("--genus", type=int, default=0)
    sp = add("complete", "completed null curve [1 : f : <f, f>] in the quadric")
    add_input(sp, "Weierstrass")
    sp = add("enumerate", "admissible branch divisors of a contact curve of degree d")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--no-certificates", action="store_true")
    sp = add("classify-pair", "index coincidences for branch orders a, b in degree d")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp = add("certify", "run a registered non-existence certificate")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--case")
    grp.add_argument("--all", action="store_true")
    sp.add_argument("--d", type=int, default=None, help="d' for parametric cases")
    sp.add_argument("--samples", type=int, default=3)
    sp = add("family", "built-in examples; --emit prints only the input file")
    sp.add_argument("--name", choices=("fd", "kusner", "peng"), required=True)
    sp.add_argument("--d", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--emit", action="store_true")
    sp = add("refute-peng", "check the proposed odd-ended Weierstrass data")
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--m", type=int, default=2)
    return p


# ---------------------------------------------------------------------------
# payload helpers


def _curve_json(c):
    return {"degree": c.degree, "coords": [p.to_string() for p in c.coords]}


def _verdict(ok):
    return "VERIFIED" if ok else "REFUTED"


def _plucker_payload(rep):
    return {
        "degree": rep["degree"], "dual_degree": rep["dual_degree"],
        "r": rep["r"], "r_dual": rep["r_dual"],
        "R_f": {k: v.to_json() for k, v in rep["R_f"].items()},
        "R_f2": {k: v.to_json() for k, v in rep["R_f2"].items()},
        "checks": rep["checks"], "violated": rep["violated"],
        "totally_ramified": rep["totally_ramified"],
    }


def _surface_payload(w, genus=0):
    """(payload, ok) of the full verification pipeline on Weierstrass data."""
    forms = forms_from_data(w)
    out = {"forms": [phi.to_string() for phi in forms], "null": verify_null(forms)}
    res = residues_vanish(forms)
    out["residues_vanish"] = res["vanish"]
    out["offending"] = res["offending"]
    if not (out["null"] and res["vanish"]):
        return out, False
    f = integrate_null(forms)
    ends = classify_ends(f)
    ep = end_product_test(f)
    out["components"] = [c.to_string() for c in f.components]
    out["pole_divisor"] = f.poles.to_json()
    out["ends"] = [e.to_json() for e in ends]
    out["end_count"] = sum(e.ends for e in ends)
    out["all_embedded_planar"] = all(e.embedded and e.planar for e in ends)
    out["end_product"] = {k: v for k, v in ep.items() if k not in ("F", "product")}
    out["end_product"]["product"] = ep["product"].to_string()
    if ep["verdict"] == "POLYNOMIAL":
        out["end_product"]["F"] = [p.to_string() for p in ep["F"]]
    out["curvature"] = curvature_and_jorge_meeks(w, genus, out["end_count"])
    ok = (out["all_embedded_planar"] and ep["verdict"] == "POLYNOMIAL"
          and out["curvature"]["jorge_meeks_consistent"])
    return out, ok


def _completion_payload(comp):
    return {"curve": _curve_json(comp["curve"]), "in_quadric": comp["in_quadric"],
            "R1": comp["R1"].to_json(), "unbranched": comp["unbranched"],
            "pole_divisor_degree": comp["pole_divisor_degree"],
            "all_poles_simple": comp["all_poles_simple"],
            "degree_matches_pole_count": comp["degree_matches_pole_count"]}


# ---------------------------------------------------------------------------
# subcommands


def cmd_ramify(args, notices):
    f, _ = parse_curve(*read_json(args.input), notices=notices)
    n = f.ambient_dim
    divisors = {str(i): ramification_divisor(f, i) for i in range(1, n + 1)}
    r = [divisors[str(i)].degree() for i in range(1, n + 1)]
    degrees = {}
    ok = True
    for k in range(1, n + 1):
        actual = associated_curve(f, k).degree
        predicted = wedge_degree_formula(f, k, r)
        degrees[str(k)] = {"actual": actual, "formula": predicted}
        ok = ok and actual == predicted
    payload = {"curve": _curve_json(f), "nondegenerate": is_nondegenerate(f),
               "R": {k: v.to_json() for k, v in divisors.items()}, "r": r,
               "associated_degrees": degrees}
    return _verdict(ok), payload


def cmd_klein(args, notices):
    f, s = parse_curve(*read_json(args.input), notices=notices)
    g, q = klein_dual(f, s)
    payload = {"contact": True, "curve": _curve_json(f), "dual": _curve_json(g),
               "quadric": [[str(x) for x in row] for row in q.matrix],
               "data": curve_to_json(g, s)}
    return "VERIFIED", payload


def cmd_inverse_klein(args, notices):
    g, s = parse_curve(*read_json(args.input), notices=notices)
    f = inverse_klein(g, s)
    payload = {"null_curve": _curve_json(g), "contact_curve": _curve_json(f),
               "contact": is_contact(f, s), "data": curve_to_json(f, s)}
    return "VERIFIED", payload


def cmd_plucker(args, notices):
    f, s = parse_curve(*read_json(args.input), notices=notices)
    rep = plucker_report(f, s)
    payload = _plucker_payload(rep)
    payload["curve"] = _curve_json(f)
    payload["dual"] = _curve_json(rep["dual"])
    return _verdict(not rep["violated"]), payload


def cmd_verify_ends(args, notices):
    w = parse_weierstrass(*read_json(args.input))
    payload, ok = _surface_payload(w, args.genus)
    return _verdict(ok), payload


def cmd_complete(args, notices):
    w = parse_weierstrass(*read_json(args.input))
    forms = forms_from_data(w)
    res = residues_vanish(forms)
    if not res["vanish"]:
        return "REFUTED", {"residues_vanish": False, "offending": res["offending"]}
    comp = complete_null_curve(integrate_null(forms))
    payload = _completion_payload(comp)
    payload["residues_vanish"] = True
    return _verdict(comp["in_quadric"] and comp["unbranched"]), payload


def cmd_enumerate(args, notices):
    verdicts = admissible_shapes(args.d, use_certificates=not args.no_certificates)
    alive = [v for v in verdicts if v.status == "ADMISSIBLE"]
    payload = {"degree": args.d, "shapes": [v.to_json() for v in verdicts],
               "admissible": [list(v.shape) for v in alive],
               "null_curve_degree": degree_report(args.d + 1) if not args.no_certificates
               else None}
    if any(v.note == "OPEN" for v in alive):
        return "OPEN", payload
    return ("VERIFIED" if alive else "CONTRADICTION"), payload


def cmd_classify_pair(args, notices):
    holds, matches = index_condition(args.d, args.a, args.b)
    if not holds:
        return "OPEN", {"d": args.d, "a": args.a, "b": args.b, "holds": False,
                        "matches": matches, "verdict": "NO_COINCIDENCE"}
    rep = classify_pair(args.d, args.a, args.b)
    rep["holds"] = True
    verdict = {"FD_CURVE": "VERIFIED", "CONTRADICTION": "CONTRADICTION",
               "CONSTRAINT_VIOLATION": "CONTRADICTION"}.get(rep["verdict"], "ERROR")
    return verdict, rep


def cmd_certify(args, notices):
    if args.all:
        certs = builtin_certificates(args.samples)
        payload = {"certificates": [c.to_json() for c in certs],
                   "open_cases": OPEN_CASES}
        ok = all(c.verdict == "CONTRADICTION" and c.matches_expected is not False
                 for c in certs)
        return ("CONTRADICTION" if ok else "OPEN"), payload
    key = resolve_case(args.case, allow_open=True)
    if key in OPEN_CASES:
        return "OPEN", dict(OPEN_CASES[key], case=key, certificate=None)
    cert = builtin_certificate(key, args.d)
    return ("CONTRADICTION" if cert.verdict == "CONTRADICTION" else "OPEN"), cert.to_json()


def cmd_family(args, notices):
    if args.name == "fd":
        if args.d is None:
            raise UsageError("family fd needs --d")
        f, s = fd_family(args.d)
        data = curve_to_json(f, s)
        if args.emit:
            return None, data
        rep = plucker_report(f, s)
        payload = _plucker_payload(rep)
        payload["curve"] = _curve_json(f)
        payload["data"] = data
        ok = not rep["violated"] and rep["totally_ramified"]
        return _verdict(ok), payload
    if args.name == "kusner":
        if args.n is None:
            raise UsageError("family kusner needs --n")
        w, closed = kusner_family(args.n)
    else:
        n = 4 if args.n is None else args.n
        m = 2 if args.m is None else args.m
        if (n, m) != (4, 2):
            raise UsageError("built-in Peng parameters exist only for n = 4, m = 2")
        w = peng_family(n, m, peng_default_params())
        closed = None
    data = weierstrass_to_json(w)
    if args.emit:
        return None, data
    payload, ok = _surface_payload(w)
    if closed is not None and payload.get("components"):
        f = integrate_null(forms_from_data(w))
        same = all((a - b).deriv() == 0 for a, b in zip(f.components, closed.components))
        payload["matches_closed_form"] = same
        ok = ok and same
    payload["data"] = data
    return _verdict(ok), payload


def cmd_refute_peng(args, notices):
    rep = refute_peng(args.n, args.m)
    verdict = {"REFUTED": "REFUTED", "NOT_REFUTED": "VERIFIED"}.get(rep["verdict"], "OPEN")
    return verdict, rep


COMMANDS = {
    "ramify": cmd_ramify, "klein": cmd_klein, "inverse-klein": cmd_inverse_klein,
    "plucker": cmd_plucker, "verify-ends": cmd_verify_ends, "complete": cmd_complete,
    "enumerate": cmd_enumerate, "classify-pair": cmd_classify_pair, "certify": cmd_certify,
    "family": cmd_family, "refute-peng": cmd_refute_peng,
}

_FAILURES = (InputError, UsageError, CurveError, WeierError, CertificateError,
             IndexConditionError, LiteralError, TowerError)


def _validate(args):
    for key in ("d", "n", "m", "a", "b", "samples"):
        v = getattr(args, key, None)
        if v is not None and v < 0:
            raise UsageError("--%s must be non-negative" % key)


def dispatch(argv):
    """(report or raw data, exit code, output format) for an argument list."""
    fmt = "text"
    sub = None
    try:
        args = build_parser().parse_args(argv)
        sub = args.subcommand
        if sub is None:
            raise UsageError("a subcommand is required: %s" % ", ".join(SUBCOMMANDS))
        fmt = args.format or ("json" if sub == "family" else "text")
        _validate(args)
        notices = []
        verdict, payload = COMMANDS[sub](args, notices)
    except _FAILURES as exc:
        return make_report(sub, "ERROR", {"error": str(exc)}), 1, fmt
    if verdict is None:
        return payload, 0, "json"
    if notices:
        payload["notices"] = notices
    return make_report(sub, verdict, payload), EXIT_CODES[verdict], fmt


def make_report(sub, verdict, payload):
    return {"schema_version": SCHEMA_VERSION, "subcommand": sub, "verdict": verdict,
            "payload": payload}


# ---------------------------------------------------------------------------
# rendering


def render_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _scalar(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "null"
    return str(x)


def _text_lines(obj, indent):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append("%s%s:" % (pad, k))
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, _inline(v)))
    else:
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append("%s-" % pad)
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append("%s- %s" % (pad, _inline(v)))
    return lines


def _flat_list(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v):
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return _scalar(v)


def render_text(report):
    if "schema_version" not in report:
        return render_json(report)
    head = ["subcommand: %s" % report["subcommand"], "verdict: %s" % report["verdict"],
            "payload:"]
    return "\n".join(head + _text_lines(report["payload"], 1)) + "\n"


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    report, code, fmt = dispatch(argv)
    out = render_json(report) if fmt == "json" else render_text(report)
    sys.stdout.write(out)
    if code == 1:
        sys.stderr.write("error: %s\n" % report["payload"]["error"])
    return code
