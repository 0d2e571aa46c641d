"""Weierstrass data, null curves in C^3 and their ends."""

from dataclasses import dataclass
from fractions import Fraction

from ..exactnum import QQ, TowerElement
from ..poly import (INFINITY, Poly, RationalFunction, gcd, hermite_reduce, lcm,
                    squarefree_decomposition, solve_bezout)
from ..curves import Divisor, coprime_base, normalize_projective, ramification_divisor


class WeierError(ValueError):
    """Invalid Weierstrass data or failed precondition."""


def field_of(*objects):
    """Join of the towers of all coefficients (QQ for rational data)."""
    desc = QQ
    stack = list(objects)
    while stack:
        obj = stack.pop()
        if isinstance(obj, TowerElement):
            desc = desc.join(obj.desc)
        elif isinstance(obj, RationalFunction):
            stack.extend(obj.num.coeffs)
            stack.extend(obj.den.coeffs)
        elif isinstance(obj, Poly):
            stack.extend(obj.coeffs)
        elif isinstance(obj, (list, tuple)):
            stack.extend(obj)
    return desc


@dataclass
class WeierstrassData:
    """Gauss map g and the dz-coefficient of the 1-form omega."""

    gauss: RationalFunction
    form: RationalFunction

    def __post_init__(self):
        if self.gauss.num.degree <= 0 and self.gauss.den.degree <= 0:
            raise WeierError("Gauss map must be non-constant")
        if not self.form:
            raise WeierError("1-form must be nonzero")


@dataclass
class NullCurveData:
    """Meromorphic null curve f = (f1, f2, f3) with its pole divisor."""

    components: tuple
    poles: Divisor = None

    def __post_init__(self):
        self.components = tuple(self.components)
        if self.poles is None:
            self.poles = pole_divisor(self.components)


@dataclass
class EndProfile:
    place: object
    ends: int
    multiplicity: int
    leading: list
    log_growth: object = Fraction(0)
    embedded: bool = False
    planar: bool = False
    leading_is_null: bool = True

    def to_json(self):
        from ..exactnum import element_literal
        place = "inf" if self.place is INFINITY else self.place.to_string()
        lead = []
        for a in self.leading:
            lead.append(a.to_string() if isinstance(a, Poly) else element_literal(a))
        return {"place": place, "ends": self.ends, "multiplicity": self.multiplicity,
                "leading_vector": lead, "log_growth": "0", "embedded": self.embedded,
                "planar": self.planar, "leading_is_null": self.leading_is_null}


def forms_from_data(w):
    """((1 - g^2) w, i (1 + g^2) w, 2 g w) over the complexified tower."""
    desc = field_of(w.gauss, w.form).complexify()
    i = desc.i
    g2 = w.gauss * w.gauss
    one = RationalFunction(Poly([desc.one]))
    return ((one - g2) * w.form, (one + g2) * w.form * i, w.gauss * w.form * 2)


def verify_null(forms):
    total = forms[0] * forms[0] + forms[1] * forms[1] + forms[2] * forms[2]
    return not total


def residues_vanish(forms):
    """Hermite-reduce each form; report offending places if any."""
    parts, remainders = [], []
    for phi in forms:
        rational, rem = hermite_reduce(phi)
        parts.append(rational)
        remainders.append(rem)
    offending = []
    for j, rem in enumerate(remainders):
        for num, den in rem.terms:
            offending.append({"component": j + 1, "place": den.to_string(),
                              "numerator": num.to_string()})
    return {"vanish": not offending, "offending": offending,
            "rational_parts": parts, "remainders": remainders}


def integrate_null(forms):
    """Exact rational antiderivatives (zero constants) of residue-free forms."""
    report = residues_vanish(forms)
    if not report["vanish"]:
        places = sorted({o["place"] for o in report["offending"]})
        raise WeierError("nonvanishing residues at places: %s" % ", ".join(places))
    return NullCurveData(tuple(report["rational_parts"]))


def is_null_curve(f):
    d = [c.deriv() for c in f.components]
    return not (d[0] * d[0] + d[1] * d[1] + d[2] * d[2])


def pole_divisor(components):
    """Max pole order per place (finite places refined to a coprime base)."""
    factored = [squarefree_decomposition(c.den) for c in components if c.den.degree > 0]
    base = coprime_base([f for fac in factored for f, _ in fac])
    finite = {}
    for b in base:
        order = 0
        for fac in factored:
            for f, m in fac:
                if gcd(f, b).degree > 0:
                    order = max(order, m)
        finite[b] = order
    inf = max([c.num.degree - c.den.degree for c in components if c] + [0])
    return Divisor(finite, inf)


def _leading_mod_place(comp, place, m):
    """Leading Laurent coefficient of comp along a place, as a Poly mod place."""
    den = comp.den
    e = 0
    rest = den
    while True:
        q, r = divmod(rest, place)
        if r:
            break
        rest = q
        e += 1
    if e < m:
        return Poly()
    # comp ~ N / (U * P'^m * (z - alpha)^m) near each root alpha
    dp = place.deriv() % place
    denom = (rest % place) * ((dp ** m) % place) % place
    inv, _ = solve_bezout(denom, place, Poly([1]))
    return (comp.num * inv) % place


def classify_ends(f):
    profiles = []
    for place, m in f.poles.sorted_places():
        lead = [_leading_mod_place(c, place, m) for c in f.components]
        null = not ((lead[0] * lead[0] + lead[1] * lead[1] + lead[2] * lead[2]) % place)
        if place.degree == 1:
            root = -place[0]
            lead = [a(root) if a else Fraction(0) for a in lead]
        profiles.append(EndProfile(place, place.degree, m, lead, Fraction(0),
                                   m == 1, m == 1, null))
    m = f.poles.infinity
    if m > 0:
        lead = []
        for c in f.components:
            if c and c.num.degree - c.den.degree == m:
                lead.append(c.num.lc / c.den.lc)
            else:
                lead.append(Fraction(0))
        null = not (lead[0] * lead[0] + lead[1] * lead[1] + lead[2] * lead[2])
        profiles.append(EndProfile(INFINITY, 1, m, lead, Fraction(0), m == 1, m == 1, null))
    return profiles


def end_product_test(f):
    """F = f * Pi with Pi the product of the finite pole places."""
    pi = Poly([1])
    for place in f.poles.finite:
        pi = pi * place
    out = []
    for j, c in enumerate(f.components):
        prod = c * RationalFunction.from_poly(pi)
        if not prod.is_polynomial():
            return {"verdict": "NOT_POLYNOMIAL", "component": j + 1,
                    "surviving_denominator": prod.den.to_string(), "product": pi}
        out.append(prod.num)
    degree = max((p.degree for p in out if p), default=0)
    return {"verdict": "POLYNOMIAL", "degree": degree, "F": out, "product": pi}


def complete_null_curve(f):
    """[1 : f : <f, f>] in P^4 with denominators cleared."""
    if not is_null_curve(f):
        raise WeierError("curve is not null")
    comps = list(f.components)
    norm = comps[0] * comps[0] + comps[1] * comps[1] + comps[2] * comps[2]
    rfs = [RationalFunction(Poly([1]))] + comps + [norm]
    common = Poly([1])
    for r in rfs:
        common = lcm(common, r.den)
    coords = [(r.num * common).exquo(r.den) for r in rfs]
    curve = normalize_projective(coords)
    x = curve.coords
    in_quadric = not (x[0] * x[4] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3])
    if not in_quadric:
        raise WeierError("completed curve is not in the quadric (internal error)")
    r1 = ramification_divisor(curve, 1)
    pole_degree = f.poles.degree()
    all_simple = all(m == 1 for m in f.poles.finite.values()) and f.poles.infinity <= 1
    return {
        "curve": curve,
        "degree": curve.degree,
        "in_quadric": in_quadric,
        "R1": r1,
        "unbranched": r1.is_zero(),
        "pole_divisor_degree": pole_degree,
        "all_poles_simple": all_simple,
        "degree_matches_pole_count": curve.degree == pole_degree,
    }


def gauss_degree(w):
    return w.gauss.degree


def curvature_and_jorge_meeks(w, genus, end_count):
    deg = gauss_degree(w)
    return {
        "gauss_degree": deg,
        "total_curvature_quarter": deg,
        "genus": genus,
        "end_count": end_count,
        "jorge_meeks_consistent": deg == genus - 1 + end_count,
        "full_verification": genus == 0,
    }
