from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from nullcurves.exactnum import approximate
from nullcurves.poly import Poly, RationalFunction
from nullcurves.weier import (NullCurveData, WeierError, WeierstrassData, classify_ends,
                              complete_null_curve, curvature_and_jorge_meeks,
                              end_product_test, forms_from_data, integrate_null,
                              is_null_curve, kusner_family, matches_printed_prefix,
                              order_witness, peng_context, peng_default_params, peng_family,
                              refute_peng, residues_vanish, verify_null)
from nullcurves.weier.families import kusner_constants, peng_constraints

z = Poly([Fraction(0), Fraction(1)])
one = Poly([Fraction(1)])
coeff = st.fractions(min_value=-6, max_value=6, max_denominator=3)


def nonzero_polys(max_degree=3):
    return st.lists(coeff, min_size=1, max_size=max_degree + 1).map(Poly).filter(bool)


@given(nonzero_polys(), nonzero_polys(), nonzero_polys(), nonzero_polys())
def test_forms_are_null(a, b, c, d):
    g = RationalFunction(a, b)
    if g.num.degree <= 0 and g.den.degree <= 0:
        g = g + RationalFunction(z)
    w = WeierstrassData(g, RationalFunction(c, d))
    forms = forms_from_data(w)
    assert verify_null(forms)


def test_constant_gauss_rejected():
    with pytest.raises(WeierError):
        WeierstrassData(RationalFunction(Poly([Fraction(3)])), RationalFunction(one))
    with pytest.raises(WeierError):
        WeierstrassData(RationalFunction(z), RationalFunction(Poly()))


def test_enneper_has_one_non_embedded_end():
    w = WeierstrassData(RationalFunction(z), RationalFunction(one))
    f = integrate_null(forms_from_data(w))
    assert is_null_curve(f)
    ends = classify_ends(f)
    assert len(ends) == 1
    assert ends[0].multiplicity == 3
    assert not ends[0].embedded


def test_catenoid_residue_reported():
    w = WeierstrassData(RationalFunction(z), RationalFunction(one, z * z))
    report = residues_vanish(forms_from_data(w))
    assert not report["vanish"]
    assert report["offending"] == [{"component": 3, "place": "z", "numerator": "2"}]
    with pytest.raises(WeierError, match="z"):
        integrate_null(forms_from_data(w))


@pytest.mark.parametrize("n", [2, 3])
def test_kusner_pipeline(n):
    w, closed = kusner_family(n)
    forms = forms_from_data(w)
    assert residues_vanish(forms)["vanish"]
    f = integrate_null(forms)
    for a, b in zip(f.components, closed.components):
        assert not (a - b).deriv()
    ends = classify_ends(f)
    assert sum(e.ends for e in ends) == 2 * n
    assert all(e.embedded and e.planar and e.leading_is_null for e in ends)
    assert end_product_test(closed)["degree"] == 2 * n
    assert end_product_test(f)["degree"] == 2 * n - 1
    comp = complete_null_curve(f)
    assert comp["degree"] == 2 * n and comp["unbranched"] and comp["in_quadric"]
    jm = curvature_and_jorge_meeks(w, 0, 2 * n)
    assert jm["gauss_degree"] == 2 * n - 1 and jm["jorge_meeks_consistent"]


def test_kusner_constants_numeric():
    s, r, _ = kusner_constants(3)
    iv = approximate(s * s, 32)
    assert iv.lo <= 5 <= iv.hi
    with mpmath.workdps(30):
        expected = 2 * mpmath.sqrt(5) / 2
        iv = approximate(r, 80)
        assert mpmath.mpf(iv.lo.numerator) / iv.lo.denominator <= expected
        assert expected <= mpmath.mpf(iv.hi.numerator) / iv.hi.denominator


def test_kusner_integral_differentiates_back():
    w, _ = kusner_family(2)
    forms = forms_from_data(w)
    f = integrate_null(forms)
    for k in range(3):
        assert f.components[k].deriv() == forms[k]


def test_pole_divisor_simple_example():
    f = NullCurveData([RationalFunction(one, z), RationalFunction(one, z * z - one),
                       RationalFunction(z * z)])
    assert f.poles.multiplicity_at(Fraction(0)) == 1
    assert f.poles.multiplicity_at(Fraction(1)) == 1
    assert f.poles.infinity == 2


def test_order_witness():
    w = order_witness(4, 2)
    assert w["omega_order_at_0"] == 2
    assert w["required_for_regular_point"] == 4
    assert w["mismatch"]


def test_peng_constraints():
    assert peng_constraints(4, 2) == []
    assert "2m != n+1" in peng_constraints(5, 3)
    assert "n >= 4" in peng_constraints(3, 2)


def test_peng_parameters_numeric():
    ctx = peng_context()
    params = peng_default_params(ctx)
    with mpmath.workdps(50):
        s15 = mpmath.sqrt(15)
        root = mpmath.sqrt(215208 * s15 + 833497)
        expected = {
            "c": -(7 * s15 + 27) / (s15 + 5),
            "lambda": -8 * s15 - 31,
            "a": (488 * s15 - 3 * root + 1890) / (3 * (8 * s15 + 31)),
        }
        for key, v in expected.items():
            iv = approximate(params[key].real(), 120)
            lo = mpmath.mpf(iv.lo.numerator) / iv.lo.denominator
            hi = mpmath.mpf(iv.hi.numerator) / iv.hi.denominator
            assert lo <= v <= hi


def test_matches_printed_prefix():
    assert matches_printed_prefix(Fraction(119497333), Fraction(119, 100), 8)
    assert not matches_printed_prefix(Fraction(120000000), Fraction(119, 100), 8)
    assert matches_printed_prefix(Fraction(-1214568239), Fraction(-121, 100), 9)


def test_peng_residues_numerically():
    """Contour integrals of the Peng forms around poles, by mpmath quadrature."""
    params = peng_default_params()
    w = peng_family(4, 2, params)
    forms = forms_from_data(w)
    assert residues_vanish(forms)["vanish"]
    with mpmath.workdps(40):
        vals = {}
        for k, v in params.items():
            iv = approximate(v.real(), 150)
            vals[k] = mpmath.mpf(iv.lo.numerator) / iv.lo.denominator
        a, b, c, lam = vals["a"], vals["b"], vals["c"], vals["lambda"]

        def phis(t):
            g = (t ** 4 - a) * (t ** 4 - b) / (t ** 2 * (t ** 4 - c))
            om = t ** 2 * (t ** 4 - c) ** 2 / ((t ** 4 - 1) ** 2 * (t ** 4 - lam) ** 2)
            return [(1 - g * g) * om, 1j * (1 + g * g) * om, 2 * g * om]

        rad = mpmath.mpf("0.01")
        lam_root = mpmath.root(-lam, 4) * mpmath.exp(1j * mpmath.pi / 4)
        for p in (mpmath.mpf(1), mpmath.mpc(0, 1), mpmath.mpf(0), lam_root):
            for k in range(3):
                res = mpmath.quad(lambda th: phis(p + rad * mpmath.exp(1j * th))[k]
                                  * rad * 1j * mpmath.exp(1j * th), [0, 2 * mpmath.pi])
                assert abs(res) < mpmath.mpf(10) ** -15


def test_refute_peng_report_shape():
    rep = refute_peng(4, 2)
    assert rep["partial"] is False
    assert rep["witness_order"]["mismatch"]
    assert rep["witness_F3"]["constant_terms_differ"]
    assert rep["witness_F3"]["P_constant"]["matches_printed"]
    assert rep["witness_F3"]["Q_constant"]["matches_printed"]
    assert rep["parameters"]["c"]["matches_printed"]
    assert rep["parameters"]["lambda"]["matches_printed"]
    direct = rep["direct"]
    assert direct["residues_vanish"]
    assert direct["end_count"] == 9
    assert direct["displayed_F3_matches_computed"]
    assert direct["contact_preimage"]["plucker_violations"] == []
    assert rep["verdict"] in ("REFUTED", "NOT_REFUTED")


def test_refute_peng_partial():
    rep = refute_peng(5, 2)
    assert rep["partial"] and rep["verdict"] == "INCONCLUSIVE"
    assert rep["witness_order"]["omega_order_at_0"] == 2
