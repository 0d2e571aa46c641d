"""Dense univariate polynomials over exact coefficient rings.

Coefficients may be Fractions, TowerElements, ParamElements or
ParamFractions; anything supporting + - * and truth-value zero testing
works for ring operations, and division needs a field.
"""

from fractions import Fraction


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class Poly:
    """Polynomial with ascending coefficient list; zero is the empty list."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    @classmethod
    def z(cls):
        return cls([0, 1])

    # basic structure ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs or (
                len(self.coeffs) == len(other.coeffs)
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))
        if isinstance(other, (int, Fraction)) or hasattr(other, "desc"):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly(%s)" % self.to_string()

    def __str__(self):
        return self.to_string()

    # arithmetic ----------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        return Poly([other])

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly()
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                t = x * y
                k = i + j
                out[k] = t if out[k] is None else out[k] + t
        zero = a[0] - a[0]
        return Poly([zero if c is None else c for c in out])

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return Poly([x * c for x in self.coeffs])

    def shift_degree(self, k):
        """Multiply by z**k."""
        if not self.coeffs:
            return self
        zero = self.coeffs[0] - self.coeffs[0]
        return Poly([zero] * k + list(self.coeffs))

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def compose(self, other):
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + Poly([c])
        return acc

    def deriv(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self):
        """Antiderivative with zero constant term (characteristic zero)."""
        if not self.coeffs:
            return Poly()
        zero = self.coeffs[0] - self.coeffs[0]
        return Poly([zero] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def map_coeffs(self, fn):
        return Poly([fn(c) for c in self.coeffs])

    # division --------------------------------------------------------------------

    def monic(self):
        if not self.coeffs:
            return self
        inv = 1 / self.lc
        return Poly([c * inv for c in self.coeffs])

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly(), self
        inv = 1 / other.lc
        q = [None] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                q[k - db] = c
                continue
            t = c * inv
            q[k - db] = t
            for j in range(db + 1):
                rem[k - db + j] = rem[k - db + j] - t * bc[j]
        return Poly(q), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        """Exact quotient; raises if the division leaves a remainder."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other):
        """True when self divides other."""
        return not (other % self)

    # infinity / reparametrization ---------------------------------------------------

    def reverse(self, n=None):
        """z**n * p(1/z); n defaults to the degree."""
        if n is None:
            n = self.degree
        if self.degree > n:
            raise ValueError("reference degree below actual degree")
        if not self.coeffs:
            return self
        zero = self.coeffs[0] - self.coeffs[0]
        cs = list(self.coeffs) + [zero] * (n + 1 - len(self.coeffs))
        return Poly(cs[::-1])

    def taylor_shift(self, a):
        """p(z + a)."""
        return self.compose(Poly([a, 1]))

    # rendering ---------------------------------------------------------------------

    def to_string(self, var="z"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
            parts.append(_term(c, mono))
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out


def _coeff_text(c):
    from ..exactnum.literal import element_literal
    if isinstance(c, Fraction):
        return element_literal(c)
    if hasattr(c, "literal"):
        return c.literal()
    return str(c)


def _is_sum(text):
    depth = 0
    for n, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and n > 0:
            return True
    return False


def _term(c, mono):
    text = _coeff_text(c)
    if not mono:
        return text
    if text == "1":
        return mono
    if text == "-1":
        return "-" + mono
    if _is_sum(text):
        return "(%s)*%s" % (text, mono)
    return "%s*%s" % (text, mono)


# ---------------------------------------------------------------------------
# gcd and friends


def gcd(a, b):
    """Monic gcd over a field; gcd(0, 0) = 0."""
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def gcdex(a, b):
    """Return (s, t, g) with s*a + t*b = g = gcd(a, b), g monic."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return s0, t0, r0
    inv = 1 / r0.lc
    return s0.scale(inv), t0.scale(inv), r0.monic()


def solve_bezout(a, b, c):
    """Find (u, v) with u*a + v*b = c and deg u < deg b (when deg b > 0).

    Requires gcd(a, b) | c.
    """
    s, t, g = gcdex(a, b)
    q, r = divmod(c, g)
    if r:
        raise ArithmeticError("gcd does not divide the right-hand side")
    u = s * q
    if b.degree > 0:
        u = u % b
    v = (c - u * a).exquo(b)
    return u, v


def lcm(a, b):
    if not a or not b:
        return Poly()
    return (a * b).exquo(gcd(a, b)).monic()


def content_gcd(polys):
    """Monic gcd of a list of polynomials (0 if all vanish)."""
    g = Poly()
    for p in polys:
        if p:
            g = gcd(g, p) if g else p.monic()
            if g.degree == 0:
                return g
    return g


def squarefree_decomposition(a):
    """Yun's algorithm: [(f1, 1), (f2, 2), ...] with monic squarefree,
    pairwise coprime factors; a = lc(a) * prod f_i**i.  Factors equal
    to 1 are omitted."""
    if not a:
        raise ValueError("squarefree decomposition of zero")
    a = a.monic()
    if a.degree == 0:
        return []
    da = a.deriv()
    c = gcd(a, da)
    w = a.exquo(c)
    y = da.exquo(c)
    z = y - w.deriv()
    out = []
    i = 1
    while w.degree > 0:
        g = gcd(w, z)
        if g.degree > 0:
            out.append((g, i))
        w = w.exquo(g)
        y = z.exquo(g)
        z = y - w.deriv()
        i += 1
    return out


def squarefree_part(a):
    """Product of the distinct squarefree factors (the radical), monic."""
    out = Poly([1])
    for f, _ in squarefree_decomposition(a):
        out = out * f
    return out


class _Infinity:
    """The point at infinity of P^1 as a place."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def ord_at_place(a, place, ref_degree=None):
    """Vanishing order of a Poly or RationalFunction along a place.

    `place` is a monic squarefree Poly or INFINITY.  At infinity a Poly
    has order ref_degree - deg (ref_degree defaults to 0, the affine
    convention, giving -deg).
    """
    from .ratfunc import RationalFunction
    if isinstance(a, RationalFunction):
        if not a.num:
            raise ValueError("infinite order: zero function")
        if place is INFINITY:
            return a.den.degree - a.num.degree
        return ord_at_place(a.num, place) - ord_at_place(a.den, place)
    if not a:
        raise ValueError("infinite order: zero polynomial")
    if place is INFINITY:
        return (0 if ref_degree is None else ref_degree) - a.degree
    if place.degree < 1:
        raise ValueError("place must have positive degree")
    k = 0
    while True:
        q, r = divmod(a, place)
        if r:
            return k
        a = q
        k += 1
