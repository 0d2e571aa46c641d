"""Divisors on P^1 at squarefree-factor granularity."""

from ..poly import INFINITY, gcd, squarefree_decomposition


def coprime_base(polys):
    """Pairwise coprime monic squarefree polynomials generating the inputs.

    Every input (assumed squarefree) is a product of base elements.
    """
    base = []
    for p in polys:
        if p.degree < 1:
            continue
        p = p.monic()
        refined = []
        for b in base:
            if p.degree < 1:
                refined.append(b)
                continue
            g = gcd(p, b)
            if g.degree < 1:
                refined.append(b)
                continue
            refined.append(g)
            rest = b.exquo(g)
            if rest.degree > 0:
                refined.append(rest.monic())
            p = p.exquo(g)
        if p.degree > 0:
            refined.append(p.monic())
        base = refined
    return base


class Divisor:
    """Formal sum of places: monic squarefree Polys and infinity."""

    __slots__ = ("finite", "infinity")

    def __init__(self, finite=None, infinity=0):
        clean = {}
        for place, mult in (finite or {}).items():
            if mult == 0:
                continue
            if place.degree < 1:
                raise ValueError("place of degree < 1")
            place = place.monic()
            clean[place] = clean.get(place, 0) + mult
        self.finite = {p: m for p, m in clean.items() if m}
        self.infinity = int(infinity)

    @classmethod
    def of_poly(cls, p, infinity=0):
        """Zero divisor of a nonzero polynomial (squarefree granularity)."""
        return cls({f: m for f, m in squarefree_decomposition(p)}, infinity)

    def degree(self):
        return sum(m * p.degree for p, m in self.finite.items()) + self.infinity

    def is_zero(self):
        return not self.finite and self.infinity == 0

    def is_effective(self):
        return self.infinity >= 0 and all(m > 0 for m in self.finite.values())

    def _combine(self, other, sign):
        base = coprime_base(list(self.finite) + list(other.finite))
        out = {}
        for b in base:
            m = self.multiplicity_on(b) + sign * other.multiplicity_on(b)
            if m:
                out[b] = m
        return Divisor(out, self.infinity + sign * other.infinity)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, k):
        return Divisor({p: m * k for p, m in self.finite.items()}, self.infinity * k)

    __rmul__ = __mul__

    def multiplicity_on(self, base_place):
        """Multiplicity along a place that is coprime to or divides each
        stored place."""
        total = 0
        for p, m in self.finite.items():
            g = gcd(p, base_place)
            if g.degree < 1:
                continue
            if g.degree != base_place.degree:
                raise ValueError("place is not refined against this divisor")
            total += m
        return total

    def multiplicity_at(self, point):
        """Multiplicity at a point of the base field (or INFINITY)."""
        if point is INFINITY:
            return self.infinity
        return sum(m for p, m in self.finite.items() if not p(point))

    def refined(self, places):
        """Same divisor written over the coprime base with `places`."""
        base = coprime_base(list(self.finite) + list(places))
        out = {}
        for b in base:
            m = self.multiplicity_on(b)
            if m:
                out[b] = m
        return Divisor(out, self.infinity)

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def sorted_places(self):
        return sorted(self.finite.items(), key=lambda item: (item[0].degree, item[0].to_string()))

    def to_json(self):
        places = [{"place": p.to_string(), "degree": p.degree, "multiplicity": m}
                  for p, m in self.sorted_places()]
        if self.infinity:
            places.append({"place": "inf", "degree": 1, "multiplicity": self.infinity})
        return {"degree": self.degree(), "places": places}

    def to_string(self):
        parts = ["%d*(%s)" % (m, p.to_string()) for p, m in self.sorted_places()]
        if self.infinity:
            parts.append("%d*(inf)" % self.infinity)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "Divisor(%s)" % self.to_string()
