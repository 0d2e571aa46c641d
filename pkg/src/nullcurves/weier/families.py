"""Built-in families: the contact curves f_d, Kusner's surfaces, Peng's data."""

from fractions import Fraction

from ..exactnum import LiteralContext, TowerElement
from ..poly import Poly, RationalFunction, gcd
from ..curves import ProjectiveCurve, SymplecticStructure
from .nullcurve import NullCurveData, WeierError, WeierstrassData


def fd_family(d):
    """[-1/(2d-1), z^(d-1), z^d, z^(2d-1)] with beta = xi0^xi3 + xi1^xi2."""
    if d < 2:
        raise WeierError("f_d needs d >= 2")
    coords = [Poly([Fraction(-1, 2 * d - 1)]), Poly.monomial(d - 1), Poly.monomial(d),
              Poly.monomial(2 * d - 1)]
    return ProjectiveCurve(coords), SymplecticStructure.standard()


def _xn(n, c, one):
    """z^n - c as a Poly with coefficients in the tower of `one`."""
    coeffs = [one * 0] * (n + 1)
    coeffs[0] = -c if c else one * 0
    coeffs[n] = one
    return Poly(coeffs)


def kusner_constants(n):
    """(s_n, r_n, context) with s_n = sqrt(2n - 1), r_n = 2 s_n / (n - 1)."""
    if n < 2:
        raise WeierError("Kusner family needs n >= 2")
    ctx = LiteralContext()
    s = ctx.parse("sqrt(%d)" % (2 * n - 1))
    ctx.desc = ctx.desc.complexify()
    s = ctx.desc.coerce(s)
    r = s * 2 / ctx.desc.from_rational(n - 1)
    return s, r, ctx


def kusner_family(n):
    """Weierstrass data of Kusner's 2n-ended surface and its closed-form f.

    g = z^(n-1)(z^n - s)/(s z^n + 1), omega = i (s z^n + 1)^2 / R^2 with
    R = z^(2n) + r z^n - 1.  Raises if R and R' share a root.
    """
    s, r, ctx = kusner_constants(n)
    desc = ctx.desc
    one, i = desc.one, desc.i
    zero = one * 0
    z = Poly([zero, one])
    zn = Poly.monomial(n, one)
    big_r = Poly.monomial(2 * n, one) + zn.scale(r) - Poly([one])
    if gcd(big_r, big_r.deriv()).degree > 0:
        raise WeierError("R and R' share a root")
    gauss = RationalFunction(Poly.monomial(n - 1, one) * (zn - Poly([s])),
                             zn.scale(s) + Poly([one]))
    lin = zn.scale(s) + Poly([one])
    form = RationalFunction((lin * lin).scale(i), big_r * big_r)
    top = Poly.monomial(2 * n - 1, one)
    ratio = desc.from_rational(Fraction(n - 1, n))
    comps = [top - z, (top + z).scale(-i),
             (Poly.monomial(2 * n, one) + Poly([one])).scale(ratio)]
    closed = NullCurveData([RationalFunction(c.scale(i), big_r) for c in comps])
    return WeierstrassData(gauss, form), closed


PENG_PARAMETER_LITERALS = {
    "a": "(488*sqrt(15) - 3*sqrt(215208*sqrt(15) + 833497) + 1890)"
         "/(3*(8*sqrt(15) + 31))",
    "b": "-(9*sqrt(15)*sqrt(215208*sqrt(15) + 833497) - 8983*sqrt(15)"
         " + 33*sqrt(215208*sqrt(15) + 833497) - 34791)"
         "/(3*(5*sqrt(15)*sqrt(215208*sqrt(15) + 833497) - 6747*sqrt(15)"
         " + 21*sqrt(215208*sqrt(15) + 833497) - 26131))",
    "c": "-(7*sqrt(15) + 27)/(sqrt(15) + 5)",
    "lambda": "-8*sqrt(15) - 31",
}

PENG_PRINTED_DECIMALS = {
    "a": "-0.502000420331517",
    "b": "41.1579116001055",
    "c": "-6.09838667696593",
    "lambda": "-61.9838667696593",
}

# Displayed data of the third component for (n, m) = (4, 2): the common
# z^4 coefficient of P and Q and their two constant terms.
PENG_F3_LITERALS = {
    "lead": "699302*sqrt(15)*sqrt(215208*sqrt(15) + 833497) - 905413342*sqrt(15)"
            " + 2708385*sqrt(215208*sqrt(15) + 833497) - 3506650795",
    "p0": "-4264614*sqrt(15)*sqrt(215208*sqrt(15) + 833497) + 5521560662*sqrt(15)"
          " - 16516779*sqrt(215208*sqrt(15) + 833497) + 21384912489",
    "q0": "43345442*sqrt(15)*sqrt(215208*sqrt(15) + 833497) - 56121019962*sqrt(15)"
          " + 167876175*sqrt(215208*sqrt(15) + 833497) - 217355775685",
}

PENG_F3_PRINTED = {"p0": (Fraction(119, 100), 8), "q0": (Fraction(-121, 100), 9)}


def peng_context():
    """Literal context over Q(sqrt 15)(sqrt(215208 sqrt 15 + 833497))(i)."""
    ctx = LiteralContext()
    ctx.parse("sqrt(215208*sqrt(15) + 833497)")
    ctx.desc = ctx.desc.complexify()
    return ctx


def peng_default_params(ctx=None):
    """The exact (a, b, c, lambda) for (n, m) = (4, 2), as a dict."""
    ctx = ctx or peng_context()
    return {k: ctx.parse(v) for k, v in PENG_PARAMETER_LITERALS.items()}


def peng_constraints(n, m, params=None):
    """List of violated admissibility constraints (empty when admissible)."""
    bad = []
    if n < 4:
        bad.append("n >= 4")
    if not 2 <= m <= n - 1:
        bad.append("2 <= m <= n-1")
    if 2 * m == n + 1:
        bad.append("2m != n+1")
    if params is not None:
        vals = [params[k] for k in ("a", "b", "c", "lambda")]
        for j, x in enumerate(vals):
            if x == 0 or x == 1:
                bad.append("parameters differ from 0 and 1")
                break
        if len({v for v in vals}) < 4:
            bad.append("parameters pairwise distinct")
    return bad


def peng_family(n, m, params):
    """g = (z^n - a)(z^n - b)/(z^m (z^n - c)),
    omega = z^(2m-2)(z^n - c)^2/((z^n - 1)^2 (z^n - lambda)^2)."""
    bad = peng_constraints(n, m, params)
    if bad:
        raise WeierError("inadmissible Peng data: " + ", ".join(bad))
    a, b, c, lam = (params[k] for k in ("a", "b", "c", "lambda"))
    one = a.desc.one if isinstance(a, TowerElement) else Fraction(1)
    pa, pb, pc = _xn(n, a, one), _xn(n, b, one), _xn(n, c, one)
    p1, pl = _xn(n, one, one), _xn(n, lam, one)
    gauss = RationalFunction(pa * pb, Poly.monomial(m, one) * pc)
    form = RationalFunction(Poly.monomial(2 * m - 2, one) * pc * pc, p1 * p1 * pl * pl)
    return WeierstrassData(gauss, form)
