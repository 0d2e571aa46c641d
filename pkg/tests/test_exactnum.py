import decimal
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from nullcurves.exactnum import (QQ, LiteralContext, LiteralError, TowerError, approximate,
                                 exact_sqrt, parse_descriptor, parse_literal, render_decimal,
                                 round_significant, sign_of)

REAL = QQ.extend(2).extend(3)
CPLX = REAL.complexify()

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def real_elements():
    return st.lists(small, min_size=4, max_size=4).map(REAL.from_coords)


def complex_elements():
    return st.lists(small, min_size=8, max_size=8).map(CPLX.from_coords)


def numeric(x, dps=60):
    """mpmath value of a Q(sqrt2)(sqrt3) element from its flat coordinates."""
    with mpmath.workdps(dps):
        gens = [mpmath.sqrt(2), mpmath.sqrt(3)]
        total = mpmath.mpf(0)
        for k, c in enumerate(x.coords):
            term = mpmath.mpf(c.numerator) / c.denominator
            for j in range(2):
                if k >> j & 1:
                    term *= gens[j]
            total += term
        return total


@given(complex_elements(), complex_elements(), complex_elements())
def test_ring_axioms(a, b, c):
    assert (a + b) - b == a
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(complex_elements())
def test_inverse(a):
    if a:
        assert a * a.inverse() == CPLX.one
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


@given(real_elements())
def test_sign_matches_high_precision_value(x):
    v = numeric(x)
    s = sign_of(x)
    if not x:
        assert s == 0
    else:
        assert s == (1 if v > 0 else -1)


@given(real_elements())
def test_approximate_encloses_value(x):
    iv = approximate(x, 64)
    v = numeric(x)
    with mpmath.workdps(60):
        lo = mpmath.mpf(iv.lo.numerator) / iv.lo.denominator
        hi = mpmath.mpf(iv.hi.numerator) / iv.hi.denominator
        assert lo <= v <= hi


@given(real_elements())
def test_exact_sqrt_of_square(x):
    r = exact_sqrt(x * x)
    assert r is not None
    assert r == x or r == -x
    assert sign_of(r) >= 0


def test_exact_sqrt_absent():
    assert exact_sqrt(REAL.from_rational(5)) is None
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)


@given(complex_elements())
def test_literal_roundtrip(x):
    ctx = LiteralContext(CPLX, frozen=True)
    assert ctx.parse(x.literal()) == x


def test_minimal_tower():
    ctx = LiteralContext()
    x = ctx.parse("sqrt(12) - 2*sqrt(3)")
    assert not x
    assert ctx.desc.to_json() == {"radicands": ["12"], "complexified": False}
    ctx = LiteralContext()
    assert ctx.parse("sqrt(-9)").literal() == "3*i"
    assert ctx.desc.complexified
    assert parse_literal("sqrt(16)/4") == 1


def test_nested_radicand():
    ctx = LiteralContext()
    x = ctx.parse("sqrt(2 + sqrt(2))")
    assert x * x == ctx.parse("2 + sqrt(2)")
    assert render_decimal(x) == mpmath.nstr(mpmath.sqrt(2 + mpmath.sqrt(2)), 15)


def test_frozen_context_rejects_new_radicals():
    ctx = LiteralContext(parse_descriptor({"radicands": ["5"]}), frozen=True)
    assert ctx.parse("sqrt(20)") == ctx.parse("2*sqrt(5)")
    with pytest.raises(LiteralError):
        ctx.parse("sqrt(7)")


def test_descriptor_rejects_square_radicand():
    with pytest.raises(LiteralError):
        parse_descriptor({"radicands": ["49/4"]})
    with pytest.raises(LiteralError):
        parse_descriptor({"radicands": ["2", "8"]})


def test_join_requires_prefix():
    a = QQ.extend(2)
    b = QQ.extend(3)
    assert a.join(a.complexify()) == a.complexify()
    with pytest.raises(TowerError):
        a.join(b)


def test_sign_of_complex_rejected():
    with pytest.raises(TowerError):
        sign_of(CPLX.i)


@pytest.mark.parametrize("expr", ["sqrt(2)", "-sqrt(3)/7", "1000*sqrt(6) - 2449",
                                  "sqrt(2)*sqrt(3) - sqrt(6)/2"])
def test_render_decimal_against_mpmath(expr):
    ctx = LiteralContext()
    x = ctx.parse(expr)
    with mpmath.workdps(50):
        v = mpmath.mpmathify(eval(expr.replace("sqrt", "mpmath.sqrt")))
        assert render_decimal(x) == mpmath.nstr(v, 15)


@given(st.fractions(min_value=-10 ** 6, max_value=10 ** 6, max_denominator=10 ** 6))
def test_round_significant_against_decimal(q):
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        v = decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator)
        text = format(v, ".15g")
    # %g drops trailing zeros of the mantissa; Decimal keeps them
    mant, _, exp = text.partition("e")
    if "." in mant:
        mant = mant.rstrip("0").rstrip(".")
    expected = mant + ("e" + exp if exp else "")
    assert round_significant(q) == expected
