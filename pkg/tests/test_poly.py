import random
from itertools import combinations
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from nullcurves.exactnum import QQ
from nullcurves.poly import (INFINITY, ParamElement, ParamFraction, Poly, RationalFunction,
                             derivative_rows, gcd, gcdex, hermite_reduce, lcm, ord_at_place,
                             residue_free, squarefree_decomposition, wedge_minors)
from nullcurves.poly.linalg import determinant, inverse, matmul, nullspace, rank

from corpus import random_form
from oracles import coeffs_of, contains_zero, iv_residue, leibniz_det

Z = sympy.Symbol("z")
coeff = st.fractions(min_value=-9, max_value=9, max_denominator=4)


def polys(max_degree=6):
    return st.lists(coeff, max_size=max_degree + 1).map(Poly)


def nonzero_polys(max_degree=6):
    return polys(max_degree).filter(bool)


def to_sympy(p):
    return sympy.Poly(list(reversed(coeffs_of(p))) or [0], Z, domain="QQ")


def from_sympy(sp):
    return Poly([Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())])


@given(polys(), nonzero_polys())
def test_divmod_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert not r or r.degree < b.degree


@given(nonzero_polys(), nonzero_polys())
def test_gcd_matches_sympy(a, b):
    g = gcd(a, b)
    assert g == from_sympy(sympy.gcd(to_sympy(a), to_sympy(b)).monic())
    assert g.divides(a) and g.divides(b)


@given(nonzero_polys(), nonzero_polys())
def test_gcdex_bezout(a, b):
    s, t, g = gcdex(a, b)
    assert s * a + t * b == g
    assert lcm(a, b) * g == (a * b).monic()


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 3)), min_size=1, max_size=4))
def test_squarefree_matches_sympy(factors):
    p = Poly([Fraction(2)])
    for root, mult in factors:
        p = p * Poly([Fraction(-root), Fraction(1)]) ** mult
    ours = {k: f for f, k in squarefree_decomposition(p)}
    _, theirs = sympy.sqf_list(to_sympy(p))
    assert len(ours) == len(theirs)
    for f, k in theirs:
        assert ours[k] == from_sympy(f.monic())


@given(nonzero_polys(4), st.integers(-3, 3), st.integers(0, 3))
def test_ord_at_place(u, root, k):
    place = Poly([Fraction(-root), Fraction(1)])
    if not u(Fraction(root)):
        u = u + Poly([Fraction(1)])
    assert ord_at_place(place ** k * u, place) == k
    assert ord_at_place(u, INFINITY) == -u.degree


@given(nonzero_polys(4), nonzero_polys(4), nonzero_polys(4), nonzero_polys(4))
def test_rational_function_field(a, b, c, d):
    x = RationalFunction(a, b)
    y = RationalFunction(c, d)
    assert (x + y) - y == x
    assert (x * y) / y == x
    assert x.den.lc == 1
    assert gcd(x.num, x.den).degree == 0


@given(nonzero_polys(4), nonzero_polys(4), nonzero_polys(4), nonzero_polys(4))
def test_quotient_rule(a, b, c, d):
    x = RationalFunction(a, b)
    y = RationalFunction(c, d)
    assert (x * y).deriv() == x.deriv() * y + x * y.deriv()
    sx = sympy.diff(sympy.Rational(1) * to_sympy(a).as_expr() / to_sympy(b).as_expr(), Z)
    num, den = sympy.fraction(sympy.cancel(sx))
    ours = x.deriv()
    assert sympy.simplify(num * to_sympy(ours.den).as_expr()
                          - den * to_sympy(ours.num).as_expr()) == 0


@given(st.integers(0, 10 ** 6))
def test_hermite_roundtrip_and_residues(seed):
    form, residues = random_form(random.Random(seed))
    rational, rem = hermite_reduce(form)
    assert rational.deriv() + rem.to_rational_function() == form
    for _, den in rem.terms:
        assert gcd(den, den.deriv()).degree == 0
    if not form:
        assert rem.is_empty()
        return
    num, den = coeffs_of(form.num), coeffs_of(form.den)
    values = {a: iv_residue(num, den, a) for a in residues}
    for a, c in residues.items():
        if c == 0:
            assert contains_zero(values[a])
        else:
            assert not contains_zero(values[a])
    assert rem.is_empty() == all(contains_zero(v) for v in values.values())
    assert residue_free(form) == rem.is_empty()


def test_hermite_log_term():
    form = RationalFunction(Poly([Fraction(1)]), Poly([Fraction(0), Fraction(1)]))
    rational, rem = hermite_reduce(form)
    assert not rational
    assert len(rem) == 1
    assert rem.places() == [Poly([Fraction(0), Fraction(1)])]


def test_hermite_polynomial_form():
    form = RationalFunction(Poly([Fraction(1), Fraction(0), Fraction(3)]))
    rational, rem = hermite_reduce(form)
    assert rational == RationalFunction(Poly([Fraction(0), Fraction(1), Fraction(0), Fraction(1)]))
    assert rem.is_empty()


def test_hermite_over_tower():
    d = QQ.extend(5).complexify()
    s = d.generator(1)
    den = Poly([-s, d.zero, d.one]) ** 2
    rational = RationalFunction(Poly([d.i, s]), den)
    rat, rem = hermite_reduce(rational.deriv())
    assert rem.is_empty()
    assert (rat - rational).deriv() == RationalFunction(Poly())


@st.composite
def square_matrices(draw, n):
    return [[draw(coeff) for _ in range(n)] for _ in range(n)]


@given(square_matrices(4))
def test_determinant_matches_leibniz(m):
    assert determinant(m) == leibniz_det(m)
    if determinant(m):
        inv = inverse(m)
        ident = matmul(m, inv)
        assert all(ident[i][j] == (i == j) for i in range(4) for j in range(4))
    else:
        assert rank(m) < 4
        for v in nullspace(m, 4):
            assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@given(st.lists(nonzero_polys(5), min_size=4, max_size=4), st.integers(1, 4))
def test_wedge_minors_match_leibniz(coords, k):
    rows = derivative_rows(coords, k)
    minors = wedge_minors(rows, k)
    for subset, val in zip(combinations(range(4), k), minors):
        sub = [[row[c] for c in subset] for row in rows]
        assert val == leibniz_det(sub)


def test_param_ring():
    a, b = ParamElement.var("nu1"), ParamElement.var("mu2")
    x = (a + b) * (a - b)
    assert x == a * a - b * b
    assert x.evaluate({"nu1": 3, "mu2": 2}) == 5
    assert not (a - a)
    assert ParamElement.const(4).is_constant()
    assert (a * 2 + 1).literal() in ("2*nu1 + 1", "1 + 2*nu1")


def test_param_fraction_cancels():
    a, b = ParamElement.var("x1"), ParamElement.var("x2")
    f = ParamFraction(a * a - b * b, a - b)
    assert f == ParamFraction(a + b)
    assert f.is_polynomial()
    with pytest.raises(ZeroDivisionError):
        ParamFraction(a, a - a)


def test_poly_over_params():
    nu = ParamElement.var("nu1")
    one = ParamElement.const(1)
    p = Poly([one, nu]) * Poly([one, -nu])
    assert p == Poly([one, ParamElement(), -(nu * nu)])
    assert p.deriv() == Poly([ParamElement(), -(nu * nu) * 2])
