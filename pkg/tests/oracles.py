"""Independent oracles.

These use plain lists of Fractions, sympy or mpmath, never the library's own
polynomial or linear algebra code, so agreement is evidence rather than
tautology.
"""

from fractions import Fraction
from itertools import permutations
from math import comb

from mpmath import iv


# ---------------------------------------------------------------------------
# list polynomials (ascending Fractions)


def coeffs_of(p):
    """Ascending Fraction coefficients of a library Poly over Q."""
    out = []
    for c in p.coeffs:
        out.append(c.to_fraction() if hasattr(c, "to_fraction") else Fraction(c))
    return out


def shift(cs, a):
    """Coefficients of p(a + t) by the binomial theorem."""
    n = len(cs)
    return [sum(cs[k] * comb(k, j) * a ** (k - j) for k in range(j, n)) for j in range(n)]


def divide_linear(cs, a):
    """(quotient, remainder) of p by (z - a), synthetic division."""
    if not cs:
        return [], Fraction(0)
    acc = Fraction(0)
    out = []
    for c in reversed(cs):
        acc = acc * a + c
        out.append(acc)
    rem = out.pop()
    return out[::-1], rem


# ---------------------------------------------------------------------------
# ramification from Taylor matrices


def _rank_increases(columns, rows):
    """Indices k where column k is independent of columns 0..k-1."""
    basis = []
    pivots = []
    out = []
    for k, col in enumerate(columns):
        v = list(col)
        for b, piv in zip(basis, pivots):
            if v[piv]:
                f = v[piv] / b[piv]
                v = [x - f * y for x, y in zip(v, b)]
        nz = [j for j in range(rows) if v[j]]
        if nz:
            basis.append(v)
            pivots.append(nz[0])
            out.append(k)
        if len(out) == rows:
            break
    return out


def taylor_gaps(coords, point):
    """Vanishing orders h_0 < ... < h_n of the osculating flag at a point.

    `point` is a Fraction or the string "inf".  Coordinates are ascending
    Fraction lists of a curve in P^n.
    """
    deg = max(len(c) - 1 for c in coords)
    if point == "inf":
        local = [list(reversed(c + [Fraction(0)] * (deg + 1 - len(c)))) for c in coords]
    else:
        local = [shift(c, Fraction(point)) for c in coords]
    length = deg + 1
    local = [c + [Fraction(0)] * (length - len(c)) for c in local]
    columns = [[c[k] for c in local] for k in range(length)]
    return _rank_increases(columns, len(coords))


def taylor_ramification(coords, point):
    """[r_1, ..., r_n] at the point from the gap sequence."""
    h = taylor_gaps(coords, point)
    return [h[i] - h[i - 1] - 1 for i in range(1, len(h))]


# ---------------------------------------------------------------------------
# determinants


def leibniz_det(m):
    """Determinant by the permutation expansion; any commutative ring."""
    n = len(m)
    total = None
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = m[0][perm[0]]
        for i in range(1, n):
            term = term * m[i][perm[i]]
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# interval residues


def _iv_frac(q):
    q = Fraction(q)
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def iv_residue(num, den, pole, prec=128):
    """Residue of num/den at a rational pole, as an mpmath interval.

    num and den are ascending Fraction lists.  The multiplicity of the pole
    is found by exact synthetic division; the Laurent coefficient is then
    evaluated in interval arithmetic at `prec` bits.
    """
    pole = Fraction(pole)
    m = 0
    rest = list(den)
    while True:
        q, r = divide_linear(rest, pole)
        if r:
            break
        rest = q
        m += 1
    if m == 0:
        return iv.mpf(0)
    old = iv.prec
    iv.prec = prec
    try:
        a = _iv_frac(pole)
        p = _shift_iv([_iv_frac(c) for c in num], a)
        d = _shift_iv([_iv_frac(c) for c in rest], a)
        # series p/d up to t^(m-1)
        series = []
        for k in range(m):
            acc = p[k] if k < len(p) else iv.mpf(0)
            for j in range(k):
                if k - j < len(d):
                    acc = acc - series[j] * d[k - j]
            series.append(acc / d[0])
        return series[m - 1]
    finally:
        iv.prec = old


def _shift_iv(cs, a):
    n = len(cs)
    return [sum((cs[k] * comb(k, j) * a ** (k - j) for k in range(j, n)), iv.mpf(0))
            for j in range(n)]


def contains_zero(x):
    return x.a <= 0 <= x.b
