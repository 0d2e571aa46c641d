"""Parser for exact-number literals.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | atom
    atom   := INTEGER | 'i' | 'sqrt' '(' expr ')' | '(' expr ')'

Rationals are written p/q.  A LiteralContext owns the tower being built:
sqrt(x) first tries exact_sqrt in the current tower and only adjoins a
new level when x is not already a square.  Square roots of negative
reals are rewritten as i*sqrt(-x).
"""

import re
from fractions import Fraction

from .tower import QQ, TowerElement, TowerError, exact_sqrt, sign_of


class LiteralError(ValueError):
    """Malformed literal."""


_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|(i)|([-+*/()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise LiteralError("unexpected character at offset %d in %r" % (pos, text))
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("sqrt", None))
        elif m.group(3):
            tokens.append(("i", None))
        else:
            tokens.append((m.group(4), None))
        pos = m.end()
    return tokens


class LiteralContext:
    """Parses literals while growing a minimal tower.

    With `frozen=True` no new levels may be adjoined; square roots must
    then already exist in the starting tower.
    """

    def __init__(self, desc=QQ, frozen=False):
        self.desc = desc
        self.frozen = frozen

    def parse(self, text):
        if isinstance(text, (int, Fraction)):
            return self.desc.from_rational(text)
        if not isinstance(text, str):
            raise LiteralError("literal must be a string, got %r" % (text,))
        self._tokens = _tokenize(text)
        self._pos = 0
        self._text = text
        if not self._tokens:
            raise LiteralError("empty literal")
        value = self._expr()
        if self._pos != len(self._tokens):
            raise LiteralError("trailing input in %r" % text)
        return self.desc.coerce(value)

    def parse_many(self, texts):
        values = [self.parse(t) for t in texts]
        return [self.desc.coerce(v) for v in values]

    # recursive descent -------------------------------------------------------

    def _peek(self):
        if self._pos < len(self._tokens):
            return self._tokens[self._pos][0]
        return None

    def _take(self, kind):
        if self._peek() != kind:
            raise LiteralError("expected %r in %r" % (kind, self._text))
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _expr(self):
        value = self._term()
        while self._peek() in ("+", "-"):
            op = self._take(self._peek())[0]
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self):
        value = self._unary()
        while self._peek() in ("*", "/"):
            op = self._take(self._peek())[0]
            rhs = self._unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise LiteralError("division by zero in %r" % self._text)
                value = value / rhs
        return value

    def _unary(self):
        if self._peek() == "-":
            self._take("-")
            return -self._unary()
        if self._peek() == "+":
            self._take("+")
            return self._unary()
        return self._atom()

    def _atom(self):
        kind = self._peek()
        if kind == "int":
            return self.desc.from_rational(self._take("int")[1])
        if kind == "i":
            self._take("i")
            if not self.desc.complexified:
                if self.frozen:
                    raise LiteralError("tower has no imaginary unit")
                self.desc = self.desc.complexify()
            return self.desc.i
        if kind == "sqrt":
            self._take("sqrt")
            self._take("(")
            arg = self._expr()
            self._take(")")
            return self._sqrt(arg)
        if kind == "(":
            self._take("(")
            value = self._expr()
            self._take(")")
            return value
        raise LiteralError("unexpected token %r in %r" % (kind, self._text))

    def _sqrt(self, x):
        x = self.desc.coerce(x)
        if not x.is_real():
            raise LiteralError("sqrt of a non-real number is not supported")
        if sign_of(x) < 0:
            return self._atom_i() * self._sqrt(-x)
        s = exact_sqrt(x)
        if s is not None:
            return s
        if self.frozen:
            raise LiteralError("sqrt(%s) is not in the given tower" % x.literal())
        self.desc = self.desc.extend(x)
        return self.desc.generator(self.desc.real_depth)

    def _atom_i(self):
        if not self.desc.complexified:
            if self.frozen:
                raise LiteralError("tower has no imaginary unit")
            self.desc = self.desc.complexify()
        return self.desc.i


def parse_literal(text, desc=QQ):
    """Parse one literal, growing the tower from `desc` as needed."""
    return LiteralContext(desc).parse(text)


def parse_descriptor(data):
    """Build a TowerDescriptor from {"radicands": [...], "complexified": bool}.

    Each radicand is parsed inside the tower built from the previous ones
    and must be positive and non-square there.
    """
    if not isinstance(data, dict):
        raise LiteralError("field descriptor must be an object")
    desc = QQ
    for j, lit in enumerate(data.get("radicands", [])):
        try:
            r = LiteralContext(desc, frozen=True).parse(lit)
            desc = desc.extend(r)
        except (TowerError, LiteralError) as exc:
            raise LiteralError("radicand %d (%r): %s" % (j, lit, exc)) from exc
    if data.get("complexified", False):
        desc = desc.complexify()
    return desc


def element_literal(x):
    if isinstance(x, TowerElement):
        return x.literal()
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)
