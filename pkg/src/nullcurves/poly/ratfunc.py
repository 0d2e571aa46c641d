"""Rational functions over a field and factorization-free integration."""

from .univariate import Poly, gcd, solve_bezout, squarefree_decomposition


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduced=False):
        if not isinstance(num, Poly):
            num = Poly([num])
        if den is None:
            den = Poly([1])
        elif not isinstance(den, Poly):
            den = Poly([den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = Poly(), Poly([1])
            return
        if not reduced:
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num.exquo(g), den.exquo(g)
        inv = 1 / den.lc
        self.num = num.scale(inv)
        self.den = den.scale(inv)

    @classmethod
    def from_poly(cls, p):
        return cls(p, Poly([1]), reduced=True)

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction.from_poly(other)
        return RationalFunction.from_poly(Poly([other]))

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n):
        if n < 0:
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num ** n, self.den ** n, reduced=True)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._lift(other)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_polynomial(self):
        return self.den.degree == 0

    def deriv(self):
        return RationalFunction(self.num.deriv() * self.den - self.num * self.den.deriv(),
                                self.den * self.den)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def map_coeffs(self, fn):
        return RationalFunction(self.num.map_coeffs(fn), self.den.map_coeffs(fn))

    @property
    def degree(self):
        """Degree as a map P^1 -> P^1."""
        return max(self.num.degree, self.den.degree)

    def to_string(self, var="z"):
        if self.den.degree == 0:
            return self.num.to_string(var)
        return "(%s)/(%s)" % (self.num.to_string(var), self.den.to_string(var))

    def __repr__(self):
        return "RationalFunction(%s)" % self.to_string()


class LogRemainder:
    """Non-integrable part of a rational 1-form: a sum of num/den with each
    den squarefree and each pair reduced.  Empty iff every residue of the
    original form vanishes."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = tuple(terms)

    def is_empty(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def places(self):
        return [den for _, den in self.terms]

    def to_rational_function(self):
        total = RationalFunction(Poly())
        for num, den in self.terms:
            total = total + RationalFunction(num, den)
        return total

    def __repr__(self):
        return "LogRemainder(%s)" % ", ".join(
            "(%s)/(%s)" % (n, d) for n, d in self.terms)


def _hermite_proper(a, d):
    """Hermite reduction of the proper fraction a/d.

    Returns (g, a_rem, d_sqf) with a/d = g' + a_rem/d_sqf, d_sqf squarefree.
    """
    g = RationalFunction(Poly())
    dm = gcd(d, d.deriv())
    ds = d.exquo(dm)
    while dm.degree > 0:
        dm2 = gcd(dm, dm.deriv())
        dms = dm.exquo(dm2)
        lhs = -(ds * dm.deriv()).exquo(dm)
        b, c = solve_bezout(lhs, dms, a)
        a = c - (b.deriv() * ds).exquo(dms)
        g = g + RationalFunction(b, dm)
        dm = dm2
    return g, a, ds


def _split_remainder(a, d, pieces):
    """Partial fractions of a/d (d squarefree, d = prod(pieces) up to a
    constant, pieces pairwise coprime); zero pieces dropped, pieces reduced."""
    if not a:
        return []
    if len(pieces) <= 1:
        chunks = [(a, d)]
    else:
        chunks = []
        for f in pieces:
            cofactor = d.exquo(f)
            # a_f * cofactor = a  (mod f)
            u, _ = solve_bezout(cofactor % f, f, a % f)
            chunks.append((u % f, f))
    out = []
    for num, den in chunks:
        if not num:
            continue
        g = gcd(num, den)
        if g.degree > 0:
            num, den = num.exquo(g), den.exquo(g)
        inv = 1 / den.lc
        out.append((num.scale(inv), den.scale(inv)))
    return out


def hermite_reduce(form):
    """Split a rational form into d/dz(rational_part) + remainder.

    The remainder has squarefree denominators and is empty exactly when the
    form is the derivative of a rational function.
    """
    if not isinstance(form, RationalFunction):
        form = RationalFunction(form)
    if not form.num:
        return RationalFunction(Poly()), LogRemainder()
    q, r = divmod(form.num, form.den)
    rational = RationalFunction.from_poly(q.antiderivative())
    if not r:
        return rational, LogRemainder()
    g, a, ds = _hermite_proper(r, form.den)
    pieces = [f for f, _ in squarefree_decomposition(form.den)]
    return rational + g, LogRemainder(_split_remainder(a, ds, pieces))


def residue_free(form):
    return hermite_reduce(form)[1].is_empty()
