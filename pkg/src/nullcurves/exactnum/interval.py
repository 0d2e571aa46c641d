"""Dyadic interval arithmetic with outward rounding.

Endpoints are Fractions whose denominators are powers of two.  Every
operation rounds the lower endpoint down and the upper endpoint up at a
fixed number of fractional bits, so the true value is always enclosed.
"""

from fractions import Fraction
from math import floor, ceil, isqrt


class Interval:
    """Closed interval [lo, hi] with Fraction endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval [%s, %s]" % (lo, hi))
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return "Interval(%s, %s)" % (self.lo, self.hi)

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def contains(self, x):
        return self.lo <= x <= self.hi

    def is_subset(self, other):
        return other.lo <= self.lo and self.hi <= other.hi

    def excludes_zero(self):
        return self.lo > 0 or self.hi < 0

    def sign(self):
        """+1 or -1 when the sign is certain, None otherwise."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None

    def magnitude_lower(self):
        """A lower bound for |x| over the interval."""
        if self.lo > 0:
            return self.lo
        if self.hi < 0:
            return -self.hi
        return Fraction(0)

    def rounded(self, bits):
        return Interval(round_down(self.lo, bits), round_up(self.hi, bits))

    def add(self, other, bits):
        return Interval(round_down(self.lo + other.lo, bits),
                        round_up(self.hi + other.hi, bits))

    def neg(self):
        return Interval(-self.hi, -self.lo)

    def mul(self, other, bits):
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Interval(round_down(min(products), bits),
                        round_up(max(products), bits))

    def sqrt(self, bits):
        """Enclosure of the square root; negative parts are clamped to 0."""
        lo = max(self.lo, Fraction(0))
        hi = max(self.hi, Fraction(0))
        scale = 4 ** bits
        low = isqrt(floor(lo * scale))
        top_n = ceil(hi * scale)
        top = isqrt(top_n)
        if top * top != top_n:
            top += 1
        return Interval(Fraction(low, 2 ** bits), Fraction(top, 2 ** bits))


def round_down(q, bits):
    scale = 2 ** bits
    return Fraction(floor(q * scale), scale)


def round_up(q, bits):
    scale = 2 ** bits
    return Fraction(ceil(q * scale), scale)


def _decimal_exponent(q):
    """Exact floor(log10(q)) for a positive Fraction."""
    e = len(str(q.numerator)) - len(str(q.denominator))
    while Fraction(10) ** e > q:
        e -= 1
    while Fraction(10) ** (e + 1) <= q:
        e += 1
    return e


def round_significant(q, digits=15):
    """Render a Fraction with `digits` significant digits, %g style.

    Rounding is exact round-half-even on the rational value.
    """
    q = Fraction(q)
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    q = abs(q)
    e = _decimal_exponent(q)
    mant = round(q * Fraction(10) ** (digits - 1 - e))
    if mant == 10 ** digits:
        mant //= 10
        e += 1
    s = str(mant)
    if -5 <= e < digits:
        if e >= 0:
            whole, frac = s[:e + 1], s[e + 1:]
        else:
            whole, frac = "0", "0" * (-e - 1) + s
        frac = frac.rstrip("0")
        return sign + whole + ("." + frac if frac else "")
    frac = s[1:].rstrip("0")
    return "%s%s%se%s%02d" % (sign, s[0], "." + frac if frac else "",
                              "+" if e >= 0 else "-", abs(e))
