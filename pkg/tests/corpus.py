"""Seeded generators shared by the module tests and the acceptance suite."""

import random
from fractions import Fraction

from nullcurves.curves import ProjectiveCurve, apply_linear, is_nondegenerate, reparametrize
from nullcurves.poly import Poly, RationalFunction
from nullcurves.poly.linalg import determinant
from nullcurves.weier import fd_family


def random_invertible(rng, n, lo=-3, hi=3):
    while True:
        m = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
        if determinant(m):
            return m


def random_mobius(rng, lo=-3, hi=3):
    while True:
        a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
        if a * d - b * c:
            return tuple(Fraction(x) for x in (a, b, c, d))


def transformed_fd(d, count, seed):
    """(f, beta) pairs: f_d under random basis changes and Mobius maps."""
    rng = random.Random(seed)
    f, s = fd_family(d)
    out = []
    for _ in range(count):
        a = random_invertible(rng, 4)
        g = reparametrize(apply_linear(a, f), random_mobius(rng))
        out.append((g, s.change_basis(a)))
    return out


def random_poly(rng, degree, lo=-4, hi=4):
    return Poly([Fraction(rng.randint(lo, hi)) for _ in range(degree + 1)])


def ramified_curve(rng, max_degree=6):
    """Non-degenerate curve in P^3 over Q with a prescribed gap sequence at
    a random rational point (or infinity), mixed by a random matrix."""
    while True:
        gaps = sorted(rng.sample(range(1, max_degree + 1), 3))
        gaps = [0] + gaps
        at_inf = rng.random() < 0.25
        p = Fraction(rng.randint(-2, 2))
        coords = []
        for h in gaps:
            unit = random_poly(rng, rng.randint(0, max_degree - h))
            base = Fraction(0) if at_inf else p
            if not unit(base):
                unit = unit + Poly([Fraction(1)])
            if at_inf:
                # local parameter 1/z: z^(D-h) * unit(1/z) with D = max_degree
                local = Poly.monomial(h, Fraction(1)) * unit
                c = local.reverse(max_degree)
            else:
                c = Poly([-p, Fraction(1)]) ** h * unit if h else unit
            coords.append(c)
        try:
            f = apply_linear(random_invertible(rng, 4), ProjectiveCurve(coords))
        except ValueError:
            continue
        if is_nondegenerate(f) and f.degree <= max_degree and all(f.wedge(4)):
            return f


def random_form(rng):
    """(form, {pole: residue}) with poles at distinct small rationals.

    form = R' + sum c_j / (z - a_j); the c_j are all zero with probability 1/2.
    """
    poles = rng.sample([Fraction(k, rng.choice((1, 2))) for k in range(-5, 6)], rng.randint(1, 3))
    poles = sorted(set(poles))
    den = Poly([Fraction(1)])
    for a in poles:
        den = den * Poly([-a, Fraction(1)]) ** rng.randint(1, 2)
    num = random_poly(rng, rng.randint(0, den.degree + 1))
    rational = RationalFunction(num, den)
    form = rational.deriv()
    zero_residues = rng.random() < 0.5
    residues = {}
    for a in poles:
        c = 0 if zero_residues else rng.randint(-3, 3)
        residues[a] = Fraction(c)
        if c:
            form = form + RationalFunction(Poly([Fraction(c)]), Poly([-a, Fraction(1)]))
    return form, residues
