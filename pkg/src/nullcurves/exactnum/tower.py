"""Exact arithmetic in towers of real quadratic extensions of Q.

A tower Q(sqrt(r1))(sqrt(r2))...(sqrt(rk)), optionally with i adjoined on
top, is described by a TowerDescriptor.  Elements are stored as nested
pairs: a level-0 value is a Fraction, a level-j value is a pair (a, b)
meaning a + b*sqrt(r_j) with a, b at level j-1.  The imaginary unit is
handled as one more level whose radicand is -1.

Every real radicand is checked positive and non-square before it is
adjoined, so an element is zero exactly when all its rational
coordinates are zero.
"""

from fractions import Fraction
from math import isqrt

from .interval import Interval, round_significant


# ---------------------------------------------------------------------------
# nested-value kernels


_ZEROS = [Fraction(0)]


def _zero(k):
    while len(_ZEROS) <= k:
        z = _ZEROS[-1]
        _ZEROS.append((z, z))
    return _ZEROS[k]


def _is_zero(x):
    if type(x) is tuple:
        return _is_zero(x[0]) and _is_zero(x[1])
    return x == 0


def _add(x, y, k):
    if k == 0:
        return x + y
    return (_add(x[0], y[0], k - 1), _add(x[1], y[1], k - 1))


def _sub(x, y, k):
    if k == 0:
        return x - y
    return (_sub(x[0], y[0], k - 1), _sub(x[1], y[1], k - 1))


def _neg(x, k):
    if k == 0:
        return -x
    return (_neg(x[0], k - 1), _neg(x[1], k - 1))


def _scale(x, q, k):
    """Multiply a level-k value by a Fraction."""
    if k == 0:
        return x * q
    return (_scale(x[0], q, k - 1), _scale(x[1], q, k - 1))


def _mul(x, y, k, rads):
    if k == 0:
        return x * y
    a, b = x
    c, d = y
    j = k - 1
    bz = _is_zero(b)
    dz = _is_zero(d)
    if bz and dz:
        return (_mul(a, c, j, rads), _zero(j))
    if bz:
        return (_mul(a, c, j, rads), _mul(a, d, j, rads))
    if dz:
        return (_mul(a, c, j, rads), _mul(b, c, j, rads))
    ac = _mul(a, c, j, rads)
    bd = _mul(b, d, j, rads)
    cross = _sub(_sub(_mul(_add(a, b, j), _add(c, d, j), j, rads), ac, j), bd, j)
    return (_add(ac, _mul(bd, rads[j], j, rads), j), cross)


def _inv(x, k, rads):
    if k == 0:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x
    a, b = x
    j = k - 1
    if _is_zero(b):
        return (_inv(a, j, rads), _zero(j))
    norm = _sub(_mul(a, a, j, rads), _mul(_mul(b, b, j, rads), rads[j], j, rads), j)
    ninv = _inv(norm, j, rads)
    return (_mul(a, ninv, j, rads), _neg(_mul(b, ninv, j, rads), j))


def _lift(x, k_from, k_to):
    for k in range(k_from, k_to):
        x = (x, _zero(k))
    return x


def _flatten(x, k):
    if k == 0:
        return [x]
    return _flatten(x[0], k - 1) + _flatten(x[1], k - 1)


def _unflatten(coords, k):
    if k == 0:
        return Fraction(coords[0])
    half = len(coords) // 2
    return (_unflatten(coords[:half], k - 1), _unflatten(coords[half:], k - 1))


def _strip(x, k):
    """Drop top levels whose sqrt-part vanishes; return (level, value)."""
    while k > 0 and _is_zero(x[1]):
        x = x[0]
        k -= 1
    return k, x


# ---------------------------------------------------------------------------
# interval evaluation of real nested values


class _Enclosure:
    """Interval evaluation of real nested values at a fixed precision."""

    def __init__(self, rads, bits):
        self.rads = rads
        self.bits = bits
        self._roots = {}

    def root(self, j):
        # enclosure of sqrt(rads[j]) where rads[j] lives at level j
        iv = self._roots.get(j)
        if iv is None:
            iv = self.value(self.rads[j], j).sqrt(self.bits)
            self._roots[j] = iv
        return iv

    def value(self, x, k):
        if k == 0:
            return Interval(x).rounded(self.bits)
        a, b = x
        ia = self.value(a, k - 1)
        if _is_zero(b):
            return ia
        ib = self.value(b, k - 1)
        return ia.add(ib.mul(self.root(k - 1), self.bits), self.bits)


def _sign(x, k, rads):
    if _is_zero(x):
        return 0
    bits = 64
    while True:
        s = _Enclosure(rads, bits).value(x, k).sign()
        if s is not None:
            return s
        bits *= 2


def _rational_sqrt(q):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sqrt(x, k, rads):
    """Non-negative square root of a real level-k value, or None."""
    if k == 0:
        return _rational_sqrt(x)
    c, d = x
    j = k - 1
    r = rads[j]
    if _is_zero(d):
        s = _sqrt(c, j, rads)
        if s is not None:
            return (s, _zero(j))
        t = _sqrt(_mul(c, _inv(r, j, rads), j, rads), j, rads)
        if t is not None:
            return (_zero(j), t)
        return None
    norm = _sub(_mul(c, c, j, rads), _mul(_mul(d, d, j, rads), r, j, rads), j)
    s = _sqrt(norm, j, rads)
    if s is None:
        return None
    half = Fraction(1, 2)
    for cand in (_scale(_add(c, s, j), half, j), _scale(_sub(c, s, j), half, j)):
        a = _sqrt(cand, j, rads)
        if a is None or _is_zero(a):
            continue
        b = _mul(d, _inv(_scale(a, Fraction(2), j), j, rads), j, rads)
        y = (a, b)
        if _sign(y, k, rads) < 0:
            y = _neg(y, k)
        return y
    return None


# ---------------------------------------------------------------------------
# descriptors


class TowerError(ValueError):
    """Invalid tower construction or incompatible towers."""


class TowerDescriptor:
    """Immutable description of a tower Q(sqrt r1)...(sqrt rk)[(i)].

    `radicands[j]` is the nested value of r_{j+1}, living at level j.
    """

    __slots__ = ("radicands", "complexified", "rads", "_hash")

    def __init__(self, radicands=(), complexified=False):
        self.radicands = tuple(radicands)
        self.complexified = bool(complexified)
        rads = list(self.radicands)
        if self.complexified:
            rads.append(_lift(Fraction(-1), 0, len(self.radicands)))
        self.rads = tuple(rads)
        self._hash = hash((self.radicands, self.complexified))

    @property
    def real_depth(self):
        return len(self.radicands)

    @property
    def depth(self):
        return len(self.radicands) + int(self.complexified)

    def __eq__(self, other):
        if not isinstance(other, TowerDescriptor):
            return NotImplemented
        return (self.radicands == other.radicands
                and self.complexified == other.complexified)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "TowerDescriptor(%s)" % self.to_json()

    # construction ---------------------------------------------------------

    def extend(self, radicand):
        """Adjoin sqrt(radicand); the radicand must be real, positive and
        not a square in this tower."""
        radicand = self.coerce(radicand)
        if not radicand.is_real():
            raise TowerError("radicand must be real")
        re = radicand.real_nested()
        k = self.real_depth
        if _sign(re, k, self.rads) <= 0:
            raise TowerError("radicand must be positive: %s" % radicand)
        if _sqrt(re, k, self.rads) is not None:
            raise TowerError("radicand is already a square: %s" % radicand)
        return TowerDescriptor(self.radicands + (re,), self.complexified)

    def complexify(self):
        if self.complexified:
            return self
        return TowerDescriptor(self.radicands, True)

    def real_part(self):
        """The real tower underneath (drops i)."""
        if not self.complexified:
            return self
        return TowerDescriptor(self.radicands, False)

    def is_prefix_of(self, other):
        n = len(self.radicands)
        return other.radicands[:n] == self.radicands

    def join(self, other):
        if self is other or self == other:
            return self
        if self.is_prefix_of(other):
            rad = other.radicands
        elif other.is_prefix_of(self):
            rad = self.radicands
        else:
            raise TowerError("towers do not embed into each other")
        return TowerDescriptor(rad, self.complexified or other.complexified)

    # elements ---------------------------------------------------------------

    def element(self, value):
        return TowerElement(self, value)

    def from_rational(self, q):
        return TowerElement(self, _lift(Fraction(q), 0, self.depth))

    @property
    def zero(self):
        return self.from_rational(0)

    @property
    def one(self):
        return self.from_rational(1)

    @property
    def i(self):
        if not self.complexified:
            raise TowerError("tower has no imaginary unit")
        k = self.real_depth
        return TowerElement(self, (_zero(k), _lift(Fraction(1), 0, k)))

    def generator(self, level):
        """sqrt(r_level) for 1 <= level <= real_depth."""
        if not 1 <= level <= self.real_depth:
            raise TowerError("no such level")
        x = (_zero(level - 1), _lift(Fraction(1), 0, level - 1))
        x = _lift(x, level, self.real_depth)
        if self.complexified:
            x = (x, _zero(self.real_depth))
        return TowerElement(self, x)

    def radicand(self, level):
        """r_level as an element of this tower."""
        x = _lift(self.radicands[level - 1], level - 1, self.depth)
        return TowerElement(self, x)

    def from_coords(self, coords):
        coords = [Fraction(c) for c in coords]
        if len(coords) != 2 ** self.depth:
            raise TowerError("expected %d coordinates" % 2 ** self.depth)
        return TowerElement(self, _unflatten(coords, self.depth))

    def coerce(self, x):
        """Bring an int/Fraction/TowerElement into this tower."""
        if isinstance(x, TowerElement):
            if x.desc is self or x.desc == self:
                return x
            return x.embed(self.join(x.desc))
        return self.from_rational(x)

    def lift_value(self, x, source):
        """Lift a nested value of tower `source` into this tower."""
        k_from, k_to = source.real_depth, self.real_depth
        if source.complexified:
            re, im = x
        else:
            re, im = x, None
        re = _lift(re, k_from, k_to)
        if self.complexified:
            im = _zero(k_to) if im is None else _lift(im, k_from, k_to)
            return (re, im)
        if im is not None:
            raise TowerError("cannot embed a complex tower into a real one")
        return re

    def radicand_literals(self):
        out = []
        for j, r in enumerate(self.radicands):
            out.append(TowerDescriptor(self.radicands[:j]).element(r).literal())
        return out

    def to_json(self):
        return {"radicands": self.radicand_literals(),
                "complexified": self.complexified}


QQ = TowerDescriptor()


# ---------------------------------------------------------------------------
# elements


class TowerElement:
    """An exact number in a quadratic tower."""

    __slots__ = ("desc", "val")

    def __init__(self, desc, val):
        self.desc = desc
        self.val = val

    # conversion -------------------------------------------------------------

    def embed(self, desc):
        if desc is self.desc:
            return self
        return TowerElement(desc, desc.lift_value(self.val, self.desc))

    def _pair(self, other):
        if isinstance(other, TowerElement):
            if other.desc is self.desc or other.desc == self.desc:
                return self.desc, self.val, other.val
            d = self.desc.join(other.desc)
            return d, d.lift_value(self.val, self.desc), d.lift_value(other.val, other.desc)
        if isinstance(other, (int, Fraction)):
            return self.desc, self.val, _lift(Fraction(other), 0, self.desc.depth)
        return None

    @property
    def coords(self):
        return tuple(_flatten(self.val, self.desc.depth))

    def is_real(self):
        return not self.desc.complexified or _is_zero(self.val[1])

    def real_nested(self):
        return self.val[0] if self.desc.complexified else self.val

    def is_rational(self):
        return _strip(self.real_nested(), self.desc.real_depth)[0] == 0 and self.is_real()

    def to_fraction(self):
        if not self.is_rational():
            raise TowerError("%s is not rational" % self.literal())
        return _strip(self.real_nested(), self.desc.real_depth)[1]

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        d, x, y = p
        return TowerElement(d, _add(x, y, d.depth))

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        d, x, y = p
        return TowerElement(d, _sub(x, y, d.depth))

    def __rsub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        d, x, y = p
        return TowerElement(d, _sub(y, x, d.depth))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TowerElement(self.desc, _scale(self.val, Fraction(other), self.desc.depth))
        p = self._pair(other)
        if p is None:
            return NotImplemented
        d, x, y = p
        return TowerElement(d, _mul(x, y, d.depth, d.rads))

    __rmul__ = __mul__

    def __neg__(self):
        return TowerElement(self.desc, _neg(self.val, self.desc.depth))

    def __pos__(self):
        return self

    def inverse(self):
        if _is_zero(self.val):
            raise ZeroDivisionError("inverse of zero in %r" % self.desc)
        return TowerElement(self.desc, _inv(self.val, self.desc.depth, self.desc.rads))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return TowerElement(self.desc, _scale(self.val, 1 / Fraction(other), self.desc.depth))
        p = self._pair(other)
        if p is None:
            return NotImplemented
        d, x, y = p
        return TowerElement(d, _mul(x, TowerElement(d, y).inverse().val, d.depth, d.rads))

    def __rtruediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        d, x, y = p
        return TowerElement(d, y) * TowerElement(d, x).inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.desc.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # complex structure ------------------------------------------------------

    def real(self):
        if not self.desc.complexified:
            return self
        k = self.desc.real_depth
        return TowerElement(self.desc, (self.val[0], _zero(k)))

    def imag(self):
        if not self.desc.complexified:
            return self.desc.zero
        k = self.desc.real_depth
        return TowerElement(self.desc, (self.val[1], _zero(k)))

    def conjugate(self):
        if not self.desc.complexified:
            return self
        k = self.desc.real_depth
        return TowerElement(self.desc, (self.val[0], _neg(self.val[1], k)))

    # comparison -------------------------------------------------------------

    def __bool__(self):
        return not _is_zero(self.val)

    def is_zero(self):
        return _is_zero(self.val)

    def _canonical(self):
        k = self.desc.real_depth
        if self.desc.complexified:
            re, im = self.val
        else:
            re, im = self.val, _zero(k)
        kr, re = _strip(re, k)
        ki, im = _strip(im, k)
        level = max(kr, ki)
        if ki == 0 and im == 0:
            if kr == 0:
                return re
            return (self.desc.radicands[:kr], re)
        return (self.desc.radicands[:level], _lift(re, kr, level), _lift(im, ki, level))

    def __eq__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        d, x, y = p
        return _is_zero(_sub(x, y, d.depth))

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(self._canonical())

    def sign(self):
        return sign_of(self)

    def __lt__(self, other):
        return sign_of(self - other) < 0

    def __le__(self, other):
        return sign_of(self - other) <= 0

    def __gt__(self, other):
        return sign_of(self - other) > 0

    def __ge__(self, other):
        return sign_of(self - other) >= 0

    # rendering ---------------------------------------------------------------

    def literal(self):
        return _render(self)

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return "TowerElement(%s)" % self.literal()


# ---------------------------------------------------------------------------
# public functions


def exact_sqrt(x):
    """Non-negative square root of a real tower element inside the same
    tower, or None when it does not exist there."""
    if not isinstance(x, TowerElement):
        x = QQ.from_rational(x)
    if not x.is_real():
        raise TowerError("exact_sqrt needs a real element")
    d = x.desc
    s = _sqrt(x.real_nested(), d.real_depth, d.rads)
    if s is None:
        return None
    if d.complexified:
        s = (s, _zero(d.real_depth))
    return TowerElement(d, s)


def sign_of(x):
    """Exact sign (-1, 0, +1) of a real tower element."""
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    if not x.is_real():
        raise TowerError("sign_of needs a real element")
    d = x.desc
    return _sign(x.real_nested(), d.real_depth, d.rads)


def _real_enclosure(x, bits):
    d = x.desc
    return _Enclosure(d.rads, bits).value(x.real_nested(), d.real_depth)


def approximate(x, precision_bits):
    """Certified dyadic interval around a real element x with width at
    most 2**-precision_bits * max(1, |x|)."""
    if precision_bits < 1:
        raise ValueError("precision_bits must be >= 1")
    if isinstance(x, (int, Fraction)):
        x = QQ.from_rational(x)
    if not x.is_real():
        raise TowerError("approximate needs a real element")
    bits = precision_bits + 16
    while True:
        iv = _real_enclosure(x, bits)
        target = Fraction(1, 2 ** precision_bits) * max(Fraction(1), iv.magnitude_lower())
        if iv.width <= target:
            return iv
        bits *= 2


def render_decimal(x, digits=15):
    """Certified rounding of a real element to `digits` significant digits."""
    if isinstance(x, (int, Fraction)):
        return round_significant(Fraction(x), digits)
    if not x.is_real():
        raise TowerError("render_decimal needs a real element")
    if x.is_rational():
        return round_significant(x.to_fraction(), digits)
    bits = 64
    while True:
        iv = _real_enclosure(x, bits)
        lo = round_significant(iv.lo, digits)
        if lo == round_significant(iv.hi, digits) and iv.excludes_zero():
            return lo
        bits *= 2


def render_complex(x, digits=15):
    """Decimal rendering of a possibly complex element as 're+imi'."""
    if not isinstance(x, TowerElement) or x.is_real():
        return render_decimal(x if not isinstance(x, TowerElement) else x.real(), digits)
    re = render_decimal(x.real(), digits)
    im = render_decimal((x.imag()), digits)
    if x.real().is_zero():
        return im + "*i"
    if im.startswith("-"):
        return "%s-%s*i" % (re, im[1:])
    return "%s+%s*i" % (re, im)


def _fraction_literal(q):
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def _render(x):
    d = x.desc
    coords = x.coords
    rad_lits = d.radicand_literals()
    factors = ["sqrt(%s)" % lit for lit in rad_lits]
    if d.complexified:
        factors.append("i")
    terms = []
    for idx, c in enumerate(coords):
        if c == 0:
            continue
        gens = [factors[j] for j in range(len(factors)) if idx >> j & 1]
        terms.append((c, gens))
    if not terms:
        return "0"
    out = ""
    for n, (c, gens) in enumerate(terms):
        neg = c < 0
        a = abs(c)
        if gens:
            body = "*".join(gens)
            if a != 1:
                if a.denominator == 1:
                    body = "%d*%s" % (a.numerator, body)
                else:
                    body = "%s/%d" % (body if a.numerator == 1 else "%d*%s" % (a.numerator, body), a.denominator)
        else:
            body = _fraction_literal(a)
        if n == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out
