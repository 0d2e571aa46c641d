"""Rational curves P^1 -> P^n given by primitive polynomial vectors."""

from itertools import combinations

from ..poly import Poly, content_gcd, derivative_rows, wedge_minors
from ..poly.linalg import rank


class CurveError(ValueError):
    """Invalid or degenerate curve data."""


class ProjectiveCurve:
    """Primitive coordinate vector [F_0 : ... : F_n] of polynomials.

    The content (monic gcd of the coordinates) is 1 and the map is
    non-constant.  `degree` is the maximal coordinate degree.
    """

    __slots__ = ("coords", "degree", "_wedges")

    def __init__(self, coords, _checked=False):
        coords = tuple(c if isinstance(c, Poly) else Poly([c]) for c in coords)
        if not _checked:
            if not any(coords):
                raise CurveError("all coordinates vanish")
            g = content_gcd(coords)
            if g.degree > 0:
                raise CurveError("coordinates have a common factor; use normalize_projective")
            if _is_constant_map(coords):
                raise CurveError("constant map")
        self.coords = coords
        self.degree = max(c.degree for c in coords if c)
        self._wedges = {}

    @property
    def ambient_dim(self):
        return len(self.coords) - 1

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __repr__(self):
        return "ProjectiveCurve([%s])" % ", ".join(c.to_string() for c in self.coords)

    def wedge(self, k):
        """Unnormalized T_k = F ^ F' ^ ... ^ F^(k-1) (cached)."""
        if k not in self._wedges:
            self._wedges[k] = wedge_minors(derivative_rows(self.coords, k), k)
        return self._wedges[k]

    def homogeneous_at_infinity(self):
        """Coordinates of w^d F(1/w): the chart around z = infinity."""
        return [c.reverse(self.degree) if c else c for c in self.coords]

    def coefficient_matrix(self):
        """(degree+1) x (n+1) matrix of coefficients."""
        return [[c[k] for c in self.coords] for k in range(self.degree + 1)]

    def to_string(self):
        return "[" + ", ".join(c.to_string() for c in self.coords) + "]"


def _is_constant_map(coords):
    nonzero = [c for c in coords if c]
    if all(c.degree <= 0 for c in nonzero):
        return True
    # all coordinates proportional to one polynomial
    for i, j in combinations(range(len(coords)), 2):
        if coords[i] * coords[j].deriv() - coords[j] * coords[i].deriv():
            return False
    return True


def normalize_projective(raw_coords):
    """Divide out the content of a polynomial vector and build the curve."""
    raw = [c if isinstance(c, Poly) else Poly([c]) for c in raw_coords]
    if not any(raw):
        raise CurveError("all coordinates vanish")
    g = content_gcd(raw)
    if g.degree > 0:
        raw = [c.exquo(g) for c in raw]
    if _is_constant_map(raw):
        raise CurveError("constant map")
    return ProjectiveCurve(raw, _checked=True)


def content_and_primitive(polys):
    """(content, primitive parts) of a polynomial vector."""
    g = content_gcd(polys)
    if not g:
        raise CurveError("all coordinates vanish")
    if g.degree == 0:
        return g, list(polys)
    return g, [p.exquo(g) for p in polys]


def associated_curve(f, k):
    """The k-th associated curve [F ^ F' ^ ... ^ F^(k-1)] in P^(C(n+1,k)-1)."""
    if not 1 <= k <= f.ambient_dim:
        raise CurveError("need 1 <= k <= n")
    if k == 1:
        return f
    t = f.wedge(k)
    if not any(t):
        raise CurveError("degenerate derivative flag: wedge of order %d vanishes" % k)
    return normalize_projective(t)


def is_nondegenerate(f):
    """True iff the image spans P^n (coefficient matrix of full rank)."""
    return rank(f.coefficient_matrix()) == len(f.coords)


def projectively_equal(f, g):
    """Equality of the maps: all 2x2 minors of the stacked vectors vanish."""
    a, b = list(f), list(g)
    if len(a) != len(b):
        return False
    for i, j in combinations(range(len(a)), 2):
        if a[i] * b[j] - a[j] * b[i]:
            return False
    return any(a) and any(b) and all(bool(x) == bool(y) for x, y in zip(a, b))


def reparametrize(f, mobius):
    """Precompose with z -> (a z + b)/(c z + d), keeping the degree."""
    a, b, c, d = mobius
    if a * d - b * c == 0:
        raise CurveError("singular Mobius map")
    num = Poly([b, a])
    den = Poly([d, c])
    deg = f.degree
    num_pows = [Poly([1])]
    den_pows = [Poly([1])]
    for _ in range(deg):
        num_pows.append(num_pows[-1] * num)
        den_pows.append(den_pows[-1] * den)
    out = []
    for coord in f.coords:
        acc = Poly()
        for k in range(deg + 1):
            ck = coord[k]
            if ck:
                acc = acc + (num_pows[k] * den_pows[deg - k]).scale(ck)
        out.append(acc)
    return normalize_projective(out)


def apply_linear(matrix, f):
    """Image of f under a constant (n+1) x (n+1) matrix."""
    out = []
    for row in matrix:
        acc = Poly()
        for a, c in zip(row, f.coords):
            if a:
                acc = acc + c.scale(a)
        out.append(acc)
    return normalize_projective(out)
