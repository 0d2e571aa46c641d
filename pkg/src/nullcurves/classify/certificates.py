"""Wedge-coefficient non-existence certificates.

A certificate is a normal form F = c0 v0 + c1 v1 + c2 v2 + c3 v3 whose
coefficients are polynomials in z over a parameter ring, with prescribed
branch orders at z = 0 and z = infinity.  After dividing T_2 = F ^ F' by its
z-power content, every further branch point must be a common zero of all
coordinates.  If one coordinate is z^k h(z) with deg h smaller than the number
of branch points still to be placed, the normal form cannot exist.
"""

from dataclasses import dataclass

from ..poly import ParamElement, Poly, derivative_rows, wedge_minors
from ..curves import PLUCKER_INDEX


class CertificateError(ValueError):
    """Unknown case, invalid degree or invalid normal form."""


def _p(name):
    return ParamElement.var(name)


def _poly(terms):
    """Poly from {exponent: coefficient} with int or ParamElement values."""
    top = max(terms)
    coeffs = [ParamElement()] * (top + 1)
    for e, c in terms.items():
        coeffs[e] = coeffs[e] + (c if isinstance(c, ParamElement) else ParamElement.const(c))
    return Poly(coeffs)


def _series(terms, name, exps):
    for e in exps:
        terms[e] = terms.get(e, 0) + _p("%s%d" % (name, e))
    return terms


def _tail(lo, hi):
    """pi_lo z^lo + ... + pi_{hi-1} z^(hi-1) + z^hi, as {exponent: coeff}."""
    terms = {hi: 1}
    for e in range(lo, hi):
        terms[e] = _p("pi%d" % e)
    return terms


def _scaled(terms, param):
    return {e: (c if isinstance(c, ParamElement) else ParamElement.const(c)) * param
            for e, c in terms.items()}


def _merge(*parts):
    out = {}
    for part in parts:
        for e, c in part.items():
            out[e] = out.get(e, 0) + c
    return out


def z_order(p):
    """Index of the lowest nonzero coefficient (None for the zero Poly)."""
    for k, c in enumerate(p.coeffs):
        if c:
            return k
    return None


@dataclass
class NonexistenceCertificate:
    case_id: str
    degree: int
    normal_form: list
    target: tuple
    r1_at_zero: int
    r1_at_infinity: int
    required_nonzero_roots: int
    content_order: int = 0
    extracted: Poly = None
    z_power: int = 0
    h: Poly = None
    verdict: str = "INCONCLUSIVE"
    expected: Poly = None
    expected_z_power: int = None
    matches_expected: bool = None
    sample: int = None
    note: str = ""

    @property
    def target_label(self):
        i, j = self.target
        return "v%d^v%d" % (i, j)

    def to_json(self):
        return {
            "case": self.case_id,
            "sample": self.sample,
            "degree": self.degree,
            "normal_form": [c.to_string() for c in self.normal_form],
            "target": self.target_label,
            "r1_at_zero": self.r1_at_zero,
            "r1_at_infinity": self.r1_at_infinity,
            "required_nonzero_roots": self.required_nonzero_roots,
            "content_order": self.content_order,
            "extracted": "z^%d*(%s)" % (self.z_power, self.h.to_string()) if self.h else "0",
            "h_degree": self.h.degree if self.h else None,
            "matches_expected": self.matches_expected,
            "verdict": self.verdict,
        }


def wedge_obstruction(case_id, normal_form, target, degree, r1_at_zero, r1_at_infinity,
                      expected=None, sample=None):
    """Run the wedge-coefficient root count on a normal form."""
    required = (degree - 3) - r1_at_zero - r1_at_infinity
    cert = NonexistenceCertificate(case_id, degree, list(normal_form), tuple(target),
                                   r1_at_zero, r1_at_infinity, required, sample=sample)
    t2 = wedge_minors(derivative_rows(cert.normal_form, 2), 2)
    orders = [z_order(p) for p in t2 if p]
    if not orders:
        raise CertificateError("INVALID_NORMAL_FORM: second wedge vanishes")
    content = min(orders)
    cert.content_order = content
    coord = t2[PLUCKER_INDEX.index(tuple(target))]
    if not coord:
        raise CertificateError("INVALID_NORMAL_FORM: target coordinate vanishes identically")
    reduced = Poly(coord.coeffs[content:])
    k = z_order(reduced)
    cert.extracted = reduced
    cert.z_power = k
    cert.h = Poly(reduced.coeffs[k:])
    h0 = cert.h[0]
    h0_constant = isinstance(h0, ParamElement) and h0.is_constant() and bool(h0)
    content_constant = any(
        p and p[content] and p[content].is_constant() for p in t2)
    if not content_constant:
        cert.note = "content coefficient is not a structural constant"
    elif cert.h.degree < required and h0_constant:
        cert.verdict = "CONTRADICTION"
    elif not h0_constant:
        cert.note = "h(0) is a parameter expression"
    else:
        cert.verdict = "NO_CONTRADICTION"
    if expected is not None:
        exp_k, exp_h = expected
        cert.expected = exp_h
        cert.expected_z_power = exp_k
        cert.matches_expected = (exp_k == k and exp_h == cert.h)
    return cert


# ---------------------------------------------------------------------------
# registry


@dataclass
class CaseSpec:
    case_id: str
    description: str
    build: object
    valid_from: int = None
    applies_to_degree: int = None
    branch_pair: tuple = None
    pattern: str = None
    default: int = None


def _h(const_and_params):
    """Expected h from [(const, param name or None), ...] by ascending power."""
    coeffs = []
    for c, name in const_and_params:
        coeffs.append(ParamElement.const(c) if name is None else _p(name) * c)
    return Poly(coeffs)


def _deg8(_=None):
    tail = {6: _p("pi1"), 7: 1}
    c0 = _merge({0: 1}, _series({}, "lambda", range(1, 6)), _scaled(tail, _p("lambda6")))
    c1 = {2: 1, 3: _p("mu1"), 5: _p("mu2")}
    c2 = _merge({3: 1, 4: _p("nu1"), 5: _p("nu2")}, _scaled(tail, _p("nu3")))
    c3 = {5: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    return nf, (1, 3), 7, 1, 1, (5, _h([(3, None), (2, "mu1")]))


def _deg9(_=None):
    tail = {7: _p("pi1"), 8: 1}
    c0 = _merge({0: 1}, _series({}, "lambda", range(1, 7)), _scaled(tail, _p("lambda7")))
    c1 = _merge({2: 1, 3: _p("mu1"), 4: _p("mu2"), 5: _p("mu3"), 6: _p("mu4")},
                _scaled(tail, _p("mu5")))
    c2 = {3: 1, 4: _p("nu1"), 5: _p("nu2")}
    c3 = {5: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    return nf, (2, 3), 8, 1, 1, (6, _h([(2, None), (1, "nu1")]))


def _deg10_case1(_=None):
    c0 = _merge({0: 1}, _series({}, "lambda", list(range(1, 8)) + [9]))
    c1 = {4: 1, 5: _p("mu5"), 9: _p("mu9")}
    c2 = {5: 1, 6: _p("nu6"), 7: _p("nu7"), 9: _p("nu9")}
    c3 = {9: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    return nf, (1, 3), 9, 3, 1, (9, _h([(5, None), (4, "mu5")]))


def _deg10_case2(_=None):
    c0 = _merge({0: 1}, _series({}, "lambda", list(range(1, 8)) + [9]))
    c1 = _merge({3: 1}, _series({}, "mu", [4, 5, 6, 7, 9]))
    c2 = {4: 1, 5: _p("nu5"), 7: _p("nu7")}
    c3 = {7: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    return nf, (2, 3), 9, 2, 1, (8, _h([(3, None), (2, "nu5")]))


def _deg11(_=None):
    tail = {8: _p("pi1"), 9: _p("pi2"), 10: 1}
    c0 = _merge({0: 1}, _series({}, "lambda", range(1, 8)), _scaled(tail, _p("lambda8")))
    c1 = {3: 1, 4: _p("mu4"), 5: _p("mu5"), 7: _p("mu7")}
    c2 = _merge({4: 1, 5: _p("nu5")}, _scaled(tail, _p("nu8")))
    c3 = {7: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    return nf, (1, 3), 10, 2, 2, (7, _h([(4, None), (3, "mu4"), (2, "mu5")]))


def _exc_1142(d):
    # degree 4d+3; branch order 2d at z = 0, d-1 at infinity
    deg = 4 * d + 3
    c0 = _merge({0: 1}, _series({}, "lambda", list(range(1, 3 * d + 4)) + [deg]))
    c1 = _merge({2 * d + 1: 1}, _series({}, "mu", list(range(2 * d + 2, 3 * d + 4)) + [deg]))
    c2 = _merge({2 * d + 2: 1}, _series({}, "nu", list(range(2 * d + 3, 3 * d + 2)) + [deg]))
    c3 = {deg: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    expected = [(2 * d + 1, None)] + [(deg - j, "nu%d" % j) for j in range(2 * d + 3, 3 * d + 2)]
    return nf, (2, 3), deg, 2 * d, d - 1, (4 * d + 4, _h(expected))


def _exc_1143(d):
    # degree 4d+1; branch order 2d-1 at z = 0, d-1 at infinity
    deg = 4 * d + 1
    c0 = _merge({0: 1}, _series({}, "lambda", list(range(1, 3 * d + 2)) + [deg]))
    c1 = _merge({2 * d: 1}, _series({}, "mu", list(range(2 * d + 1, 3 * d)) + [deg]))
    c2 = _merge({2 * d + 1: 1}, _series({}, "nu", list(range(2 * d + 2, 3 * d + 2)) + [deg]))
    c3 = {deg: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    expected = [(2 * d + 1, None)] + [(deg - j, "mu%d" % j) for j in range(2 * d + 1, 3 * d)]
    return nf, (1, 3), deg, 2 * d - 1, d - 1, (4 * d + 1, _h(expected))


def _exc_2142(d):
    # degree 3d; branch order d-1 at z = 0, d-2 at infinity
    deg = 3 * d
    tail = _tail(2 * d + 2, deg)
    c0 = _merge({0: 1}, _series({}, "lambda", range(1, 2 * d + 2)),
                _scaled(tail, _p("lambda%d" % (2 * d + 2))))
    c1 = _merge({d: 1}, _series({}, "mu", range(d + 1, 2 * d + 2)),
                _scaled(tail, _p("mu%d" % (2 * d + 2))))
    c2 = _merge({d + 1: 1}, _series({}, "nu", list(range(d + 2, 2 * d)) + [2 * d + 1]))
    c3 = {2 * d + 1: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    expected = [(d, None)] + [(2 * d + 1 - j, "nu%d" % j) for j in range(d + 2, 2 * d)]
    return nf, (2, 3), deg, d - 1, d - 2, (2 * d + 2, _h(expected))


def _exc_2143(d):
    # degree 3d+1; branch order d-1 at both z = 0 and infinity
    deg = 3 * d + 1
    tail = _tail(2 * d + 2, deg)
    c0 = _merge({0: 1}, _series({}, "lambda", range(1, 2 * d + 2)),
                _scaled(tail, _p("lambda%d" % (2 * d + 2))))
    c1 = _merge({d: 1}, _series({}, "mu", list(range(d + 1, 2 * d)) + [2 * d + 1]))
    c2 = _merge({d + 1: 1}, _series({}, "nu", range(d + 2, 2 * d + 2)),
                _scaled(tail, _p("nu%d" % (2 * d + 2))))
    c3 = {2 * d + 1: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    expected = [(d + 1, None)] + [(2 * d + 1 - j, "mu%d" % j) for j in range(d + 1, 2 * d)]
    return nf, (1, 3), deg, d - 1, d - 1, (2 * d + 1, _h(expected))


def _exc_3142(d):
    # degree 3d+2; branch order d-1 at both z = 0 and infinity
    deg = 3 * d + 2
    tail = _tail(2 * d + 3, deg)
    c0 = _merge({0: 1}, _series({}, "lambda", range(1, 2 * d + 3)),
                _scaled(tail, _p("lambda%d" % (2 * d + 3))))
    c1 = _merge({d: 1}, _series({}, "mu", range(d + 1, 2 * d + 3)),
                _scaled(tail, _p("mu%d" % (2 * d + 3))))
    c2 = _merge({d + 1: 1}, _series({}, "nu", range(d + 2, 2 * d + 2)))
    c3 = {2 * d + 1: 1}
    nf = [_poly(c) for c in (c0, c1, c2, c3)]
    expected = [(d, None)] + [(2 * d + 1 - j, "nu%d" % j) for j in range(d + 2, 2 * d + 1)]
    return nf, (2, 3), deg, d - 1, d - 1, (2 * d + 2, _h(expected))


CASES = {
    "DEG8": CaseSpec("DEG8", "contact degree 7, branch orders 1 at 0 and infinity",
                     _deg8, applies_to_degree=7, branch_pair=(1, 1)),
    "DEG9": CaseSpec("DEG9", "contact degree 8, branch orders 1 at 0 and infinity",
                     _deg9, applies_to_degree=8, branch_pair=(1, 1)),
    "DEG10_CASE1": CaseSpec("DEG10_CASE1", "contact degree 9, R1 = 3p+q+r+s",
                            _deg10_case1, applies_to_degree=9, branch_pair=(3, 1)),
    "DEG10_CASE2": CaseSpec("DEG10_CASE2", "contact degree 9, R1 = 2p+q+r+s+t",
                            _deg10_case2, applies_to_degree=9, branch_pair=(2, 1)),
    "DEG11": CaseSpec("DEG11", "contact degree 10, two branch points of order 2",
                      _deg11, applies_to_degree=10, branch_pair=(2, 2)),
    "EXC2_1142": CaseSpec("EXC2_1142", "pattern (1 1)(4 2): degree 4d'+3, a = d'-1, b = 2d'",
                          _exc_1142, valid_from=2, pattern="(1 1)(4 2)", default=2),
    "EXC2_1143": CaseSpec("EXC2_1143", "pattern (1 1)(4 3): degree 4d'+1, a = d'-1, b = 2d'-1",
                          _exc_1143, valid_from=2, pattern="(1 1)(4 3)", default=2),
    "EXC2_2142": CaseSpec("EXC2_2142", "pattern (2 1)(4 2): degree 3d', a = d'-2, b = d'-1",
                          _exc_2142, valid_from=3, pattern="(2 1)(4 2)", default=3),
    "EXC2_2143": CaseSpec("EXC2_2143", "pattern (2 1)(4 3): degree 3d'+1, a = b = d'-1",
                          _exc_2143, valid_from=2, pattern="(2 1)(4 3)", default=2),
    "EXC2_3142": CaseSpec("EXC2_3142", "pattern (3 1)(4 2): degree 3d'+2, a = b = d'-1",
                          _exc_3142, valid_from=2, pattern="(3 1)(4 2)", default=2),
}

# Shapes that survive every inequality and have no certificate.
OPEN_CASES = {
    "DEG10_CASE3": {"contact_degree": 9, "shape": [1, 1, 1, 1, 1, 1]},
    "DEG11_OPEN1": {"contact_degree": 10, "shape": [2, 1, 1, 1, 1, 1]},
    "DEG11_OPEN2": {"contact_degree": 10, "shape": [1, 1, 1, 1, 1, 1, 1]},
}

ALIASES = {"deg8": "DEG8", "deg9": "DEG9", "deg10-case1": "DEG10_CASE1",
           "deg10-case2": "DEG10_CASE2", "deg10-case3": "DEG10_CASE3", "deg11": "DEG11"}


def resolve_case(case_id, allow_open=False):
    key = ALIASES.get(case_id.lower(), case_id.upper().replace("-", "_"))
    if key in CASES or (allow_open and key in OPEN_CASES):
        return key
    raise CertificateError("unknown case id %r" % case_id)


def builtin_certificate(case_id, d=None):
    """Instantiate a registered normal form and run the obstruction."""
    spec = CASES[resolve_case(case_id)]
    if spec.valid_from is None:
        if d is not None:
            raise CertificateError("case %s has no degree parameter" % spec.case_id)
        sample = None
    else:
        sample = spec.default if d is None else d
        if sample < spec.valid_from:
            raise CertificateError("case %s needs d' >= %d" % (spec.case_id, spec.valid_from))
    nf, target, degree, r0, rinf, expected = spec.build(sample)
    return wedge_obstruction(spec.case_id, nf, target, degree, r0, rinf, expected, sample)


def builtin_certificates(samples=3):
    """Every registered case; parametric families at their smallest `samples` values."""
    out = []
    for case_id, spec in CASES.items():
        if spec.valid_from is None:
            out.append(builtin_certificate(case_id))
        else:
            for d in range(spec.valid_from, spec.valid_from + samples):
                out.append(builtin_certificate(case_id, d))
    return out
