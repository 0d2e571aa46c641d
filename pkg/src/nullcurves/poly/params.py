"""Sparse multivariate polynomials in named parameters.

Used for the free scalars of normal forms (lambda1, mu5, nu7, pi1, ...).
A monomial is a tuple of (name, exponent) pairs sorted by variable key;
coefficients are Fractions.  ParamFraction adds quotients so that gcd and
squarefree computations can run over the fraction field.
"""

import re
from fractions import Fraction

_NAME = re.compile(r"^([A-Za-z_]+?)(\d*)$")


def variable_key(name):
    """Natural order: alphabetic stem first, then the numeric index."""
    m = _NAME.match(name)
    if m is None:
        return (name, -1)
    stem, idx = m.groups()
    return (stem, int(idx) if idx else -1)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda item: variable_key(item[0])))


def _mono_degree(m):
    return sum(e for _, e in m)


def _mono_sort_key(m):
    # graded lex, higher total degree first, then variables in natural order
    flat = []
    for v, e in m:
        flat.append((variable_key(v), -e))
    return (-_mono_degree(m), flat)


class ParamElement:
    """Polynomial with Fraction coefficients in named indeterminates."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = Fraction(c)
        self.terms = clean

    @classmethod
    def var(cls, name):
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    def _lift(self, other):
        if isinstance(other, ParamElement):
            return other
        if isinstance(other, (int, Fraction)):
            return ParamElement.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ParamElement(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamElement({m: c * other for m, c in self.terms.items()})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return ParamElement(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, ParamElement):
            if other.is_constant():
                return self * (1 / other.constant_value())
            return ParamFraction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamFraction(ParamElement.const(other), self)
        return NotImplemented

    def __pow__(self, n):
        result = ParamElement.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset(self.terms.items()))

    def is_constant(self):
        return all(not m for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get((), Fraction(0))

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def variables(self):
        names = {v for m in self.terms for v, _ in m}
        return sorted(names, key=variable_key)

    def total_degree(self):
        return max((_mono_degree(m) for m in self.terms), default=0)

    def evaluate(self, values):
        """Substitute Fractions (or anything ring-like) for the variables."""
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t = t * values[v] ** e
            total = total + t
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _mono_sort_key(item[0]))

    def literal(self):
        if not self.terms:
            return "0"
        out = ""
        for n, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = abs(c)
            mono = "*".join(v if e == 1 else "%s^%d" % (v, e) for v, e in m)
            if not mono:
                body = str(a.numerator) if a.denominator == 1 else "%d/%d" % (a.numerator, a.denominator)
            elif a == 1:
                body = mono
            elif a.denominator == 1:
                body = "%d*%s" % (a.numerator, mono)
            else:
                body = "%d/%d*%s" % (a.numerator, a.denominator, mono)
            if n == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return "ParamElement(%s)" % self.literal()


def _lead(p):
    return p.sorted_terms()[0]


def _mono_divide(m1, m2):
    """m1 / m2 as a monomial, or None when m2 does not divide m1."""
    exps = dict(m1)
    for v, e in m2:
        left = exps.get(v, 0) - e
        if left < 0:
            return None
        if left:
            exps[v] = left
        else:
            exps.pop(v, None)
    return tuple(sorted(exps.items(), key=lambda item: variable_key(item[0])))


def exact_divide(p, q):
    """p / q in the polynomial ring when q divides p, else None."""
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    quotient = {}
    rem = p
    qm, qc = _lead(q)
    while rem:
        rm, rc = _lead(rem)
        m = _mono_divide(rm, qm)
        if m is None:
            return None
        c = rc / qc
        quotient[m] = quotient.get(m, 0) + c
        rem = rem - ParamElement({m: c}) * q
    return ParamElement(quotient)


def _monomial_content(p):
    common = None
    for m in p.terms:
        exps = dict(m)
        if common is None:
            common = exps
        else:
            common = {v: min(e, exps[v]) for v, e in common.items() if v in exps}
    return tuple(sorted(((v, e) for v, e in (common or {}).items() if e),
                        key=lambda item: variable_key(item[0])))


def _cancel(num, den):
    """Cheap normalization: shared monomial factors, exact divisibility of
    one side by the other, and a den with unit leading coefficient."""
    mn, md = _monomial_content(num), _monomial_content(den)
    shared = tuple((v, min(e, dict(md)[v])) for v, e in mn if v in dict(md))
    if shared:
        num = ParamElement({_mono_divide(m, shared): c for m, c in num.terms.items()})
        den = ParamElement({_mono_divide(m, shared): c for m, c in den.terms.items()})
    q = exact_divide(num, den)
    if q is not None:
        return q, ParamElement.const(1)
    q = exact_divide(den, num)
    if q is not None:
        num, den = ParamElement.const(1), q
        if den.is_constant():
            return num * (1 / den.constant_value()), ParamElement.const(1)
    lc = _lead(den)[1]
    return num * (1 / lc), den * (1 / lc)


class ParamFraction:
    """Quotient num/den of ParamElements (den nonzero), not reduced.

    Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, ParamElement):
            num = ParamElement.const(num)
        if den is None:
            den = ParamElement.const(1)
        elif not isinstance(den, ParamElement):
            den = ParamElement.const(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if den.is_constant():
            num = num * (1 / den.constant_value())
            den = ParamElement.const(1)
        elif num:
            num, den = _cancel(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _lift(other):
        if isinstance(other, ParamFraction):
            return other
        if isinstance(other, (int, Fraction, ParamElement)):
            return ParamFraction(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ParamFraction(self.num + o.num, self.den)
        return ParamFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ParamFraction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ParamFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero")
        return ParamFraction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def is_polynomial(self):
        return self.den.is_constant()

    def literal(self):
        if self.den.is_constant():
            return self.num.literal()
        return "(%s)/(%s)" % (self.num.literal(), self.den.literal())

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return "ParamFraction(%s)" % self.literal()


def param_vars(*names):
    return [ParamElement.var(n) for n in names]
