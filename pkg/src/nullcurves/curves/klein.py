"""Symplectic structures on C^4 and the Klein correspondence.

A contact curve f in P^3 (beta(F, F') = 0) has its tangent-line curve
f_2 = [F ^ F'] inside the hyperplane beta^perp of Lambda^2 C^4 = C^6.
Restricted to that hyperplane, the wedge pairing is a nondegenerate
quadratic form on C^5, and f_2 is a null curve for it.  The inverse map
recovers f as the common point of the lines f_2(z) and f_2'(z).
"""

from fractions import Fraction
from itertools import combinations

from ..poly import Poly
from ..poly.linalg import inverse, matmul, nullspace, transpose
from .projective import CurveError, is_nondegenerate, normalize_projective, projectively_equal
from .ramification import ramification_divisor

PLUCKER_INDEX = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
PLUCKER_LABELS = ["v%d^v%d" % p for p in PLUCKER_INDEX]

# u ^ v coefficient on e0^e1^e2^e3 is u01 v23 - u02 v13 + u03 v12 + u12 v03 - u13 v02 + u23 v01
_WEDGE_PAIRING = {(0, 5): 1, (1, 4): -1, (2, 3): 1}


def _q(x):
    return x if not isinstance(x, int) else Fraction(x)


def _zero(x):
    return x - x


class SymplecticStructure:
    """Nondegenerate antisymmetric 4x4 form beta with derived data.

    omega: 6x6 symmetric matrix of Pf(beta) times the wedge pairing.
    perp_basis: 6x5 matrix whose columns are the reduced-echelon basis of
    beta^perp in lex Plucker order; `free` lists the Plucker indices that
    serve directly as coordinates on beta^perp.
    """

    def __init__(self, beta):
        beta = [[_q(x) for x in row] for row in beta]
        if len(beta) != 4 or any(len(r) != 4 for r in beta):
            raise CurveError("beta must be 4x4")
        for i in range(4):
            for j in range(4):
                if beta[i][j] != -beta[j][i]:
                    raise CurveError("beta is not antisymmetric")
        self.beta = beta
        b = beta
        self.pfaffian = b[0][1] * b[2][3] - b[0][2] * b[1][3] + b[0][3] * b[1][2]
        if not self.pfaffian:
            raise CurveError("beta is degenerate")
        self.functional = [b[i][j] for i, j in PLUCKER_INDEX]
        zero = _zero(self.pfaffian)
        omega = [[zero] * 6 for _ in range(6)]
        for (a, c), sgn in _WEDGE_PAIRING.items():
            omega[a][c] = self.pfaffian * sgn
            omega[c][a] = self.pfaffian * sgn
        self.omega = omega
        basis = nullspace([self.functional], 6)
        self.perp_basis = transpose(basis)
        pivot = next(k for k in range(6) if self.functional[k])
        self.free = [k for k in range(6) if k != pivot]
        self.quadric = QuadricForm(matmul(matmul(transpose(self.perp_basis), omega), self.perp_basis))

    @classmethod
    def standard(cls):
        """beta = xi0^xi3 + xi1^xi2."""
        b = [[0] * 4 for _ in range(4)]
        b[0][3], b[3][0] = 1, -1
        b[1][2], b[2][1] = 1, -1
        return cls(b)

    def pair(self, u, v):
        """beta(u, v) for vectors of ring elements (e.g. Polys)."""
        acc = None
        for i in range(4):
            for j in range(4):
                bij = self.beta[i][j]
                if bij and u[i] and v[j]:
                    t = u[i] * v[j] * bij
                    acc = t if acc is None else acc + t
        return acc if acc is not None else Poly()

    def to_perp(self, w):
        """Coordinates in perp_basis of a Plucker vector lying in beta^perp."""
        return [w[k] for k in self.free]

    def from_perp(self, x):
        """Plucker vector P x."""
        out = []
        for row in self.perp_basis:
            acc = None
            for a, c in zip(row, x):
                if a and c:
                    t = c * a
                    acc = t if acc is None else acc + t
            out.append(acc if acc is not None else Poly())
        return out

    def change_basis(self, matrix):
        """Structure for new coordinates F~ = A F: beta~ = A^-T beta A^-1."""
        ainv = inverse(matrix)
        new = matmul(matmul(transpose(ainv), self.beta), ainv)
        return SymplecticStructure(new)

    def to_json(self):
        from ..exactnum import element_literal
        return [[element_literal(x) for x in row] for row in self.beta]


class QuadricForm:
    """Symmetric 5x5 matrix: the wedge pairing on beta^perp."""

    def __init__(self, matrix):
        self.matrix = matrix

    def value(self, u, v):
        acc = None
        for i, row in enumerate(self.matrix):
            if not u[i]:
                continue
            for j, a in enumerate(row):
                if a and v[j]:
                    t = u[i] * v[j] * a
                    acc = t if acc is None else acc + t
        return acc if acc is not None else Poly()

    def rank(self):
        from ..poly.linalg import rank
        return rank(self.matrix)


def is_contact(f, s):
    if f.ambient_dim != 3:
        raise CurveError("contact curves live in P^3")
    return not s.pair(f.coords, [c.deriv() for c in f.coords])


def klein_dual(f, s):
    """Second associated curve of a contact curve, in beta^perp coordinates."""
    if f.ambient_dim != 3:
        raise CurveError("contact curves live in P^3")
    if f.degree < 2:
        raise CurveError("curve is a line")
    if not is_contact(f, s):
        raise CurveError("curve is not contact for beta")
    t = f.wedge(2)
    if any(s.functional[k] and t[k] for k in range(6)):
        # beta(T) = beta(F, F') must vanish; recheck as a sum
        total = None
        for a, p in zip(s.functional, t):
            if a and p:
                total = p.scale(a) if total is None else total + p.scale(a)
        if total:
            raise CurveError("tangent lines are not in beta^perp")
    g = normalize_projective(s.to_perp(t))
    q = s.quadric
    gd = [c.deriv() for c in g.coords]
    if q.value(g.coords, g.coords) or q.value(gd, gd):
        raise CurveError("dual curve is not null (internal error)")
    if is_nondegenerate(f) and not is_nondegenerate(g):
        raise CurveError("dual of a nondegenerate curve is degenerate (internal error)")
    return g, q


_TRIPLES = list(combinations(range(4), 3))
_PINDEX = {p: k for k, p in enumerate(PLUCKER_INDEX)}


def _incidence_rows(w):
    """Rows of the linear map v -> v ^ w (Lambda^2 -> Lambda^3)."""
    rows = []
    for a, b, c in _TRIPLES:
        row = [Poly()] * 4
        row[a] = w[_PINDEX[(b, c)]]
        row[b] = -w[_PINDEX[(a, c)]]
        row[c] = w[_PINDEX[(a, b)]]
        rows.append(row)
    return rows


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def inverse_klein(g, s):
    """Recover the contact curve f with klein_dual(f) = g."""
    if g.ambient_dim != 4:
        raise CurveError("null curves for the Klein correspondence live in P^4")
    q = s.quadric
    gd = [c.deriv() for c in g.coords]
    if q.value(g.coords, g.coords):
        raise CurveError("curve is not contained in the quadric")
    if q.value(gd, gd):
        raise CurveError("curve is not null")
    w = s.from_perp(g.coords)
    wd = s.from_perp(gd)
    rows = _incidence_rows(w) + _incidence_rows(wd)
    kernel = None
    for trip in combinations(range(len(rows)), 3):
        sub = [rows[t] for t in trip]
        v = []
        for col in range(4):
            keep = [c for c in range(4) if c != col]
            minor = _det3([[r[c] for c in keep] for r in sub])
            v.append(minor if col % 2 == 0 else -minor)
        if any(v):
            kernel = v
            break
    if kernel is None:
        raise CurveError("image contained in a line")
    for row in rows:
        acc = Poly()
        for a, x in zip(row, kernel):
            if a and x:
                acc = acc + a * x
        if acc:
            raise CurveError("no common point of consecutive lines (not a dual curve)")
    f = normalize_projective(kernel)
    if f.degree < 2:
        raise CurveError("image contained in a line")
    back, _ = klein_dual(f, s)
    if not projectively_equal(back, g):
        raise CurveError("roundtrip check failed (internal error)")
    return f


def plucker_report(f, s):
    """Check the genus-0 Plucker identities of a contact curve exactly."""
    if not is_contact(f, s):
        raise CurveError("curve is not contact for beta")
    if f.degree < 2:
        raise CurveError("curve is a line")
    rf = {i: ramification_divisor(f, i) for i in (1, 2, 3)}
    g, _ = klein_dual(f, s)
    rg = {i: ramification_divisor(g, i) for i in (1, 2, 3, 4)}
    r1, r2 = rf[1].degree(), rf[2].degree()
    checks = {
        "r2_even": r2 % 2 == 0,
        "deg_f_eq_3_plus_r1_plus_half_r2": 2 * f.degree == 6 + 2 * r1 + r2,
        "deg_f2_eq_4_plus_r1_plus_r2": g.degree == 4 + r1 + r2,
        "R1_f_eq_R3_f": rf[1] == rf[3],
        "R1_f2_eq_R4_f2_eq_R2_f": rg[1] == rg[4] and rg[4] == rf[2],
        "R2_f2_eq_R3_f2_eq_R1_f": rg[2] == rg[3] and rg[3] == rf[1],
    }
    return {
        "degree": f.degree,
        "dual_degree": g.degree,
        "r": [rf[i].degree() for i in (1, 2, 3)],
        "r_dual": [rg[i].degree() for i in (1, 2, 3, 4)],
        "R_f": {str(i): rf[i] for i in (1, 2, 3)},
        "R_f2": {str(i): rg[i] for i in (1, 2, 3, 4)},
        "checks": checks,
        "violated": [k for k, ok in checks.items() if not ok],
        "totally_ramified": r2 == 0 and r1 == f.degree - 3,
        "dual": g,
    }


# ---------------------------------------------------------------------------
# the standard quadric model


def exterior_square(a):
    """6x6 matrix of Lambda^2 A in lex Plucker order."""
    out = []
    for i, j in PLUCKER_INDEX:
        row = []
        for k, l in PLUCKER_INDEX:
            row.append(a[i][k] * a[j][l] - a[i][l] * a[j][k])
        out.append(row)
    return out


def symplectic_basis(s):
    """Matrix C (columns = new basis) with C^T beta C = standard beta."""
    b = s.beta

    def pair(u, v):
        return sum((u[i] * b[i][j] * v[j] for i in range(4) for j in range(4)), Fraction(0))

    units = [[Fraction(int(i == k)) for i in range(4)] for k in range(4)]
    remaining = list(units)
    u0 = remaining.pop(0)
    partner = next(v for v in remaining if pair(u0, v))
    c0 = pair(u0, partner)
    u3 = [x / c0 for x in partner]
    remaining.remove(partner)

    def project(v):
        # remove components along u0, u3 so that v is beta-orthogonal to both
        a = pair(v, u3)
        c = pair(u0, v)
        return [v[i] - a * u0[i] - c * u3[i] for i in range(4)]

    rest = [project(v) for v in remaining]
    u1 = next(v for v in rest if any(v))
    u2 = next((v for v in rest if pair(u1, v)), None)
    if u2 is None:
        raise CurveError("beta is degenerate")
    c1 = pair(u1, u2)
    u2 = [x / c1 for x in u2]
    return transpose([u0, u1, u2, u3])


def standard_quadric_map(s, i_unit):
    """5x5 matrix M taking beta^perp coordinates x to X with
    X0 X4 - X1^2 - X2^2 - X3^2 proportional to the wedge pairing of x.

    `i_unit` is the imaginary unit of the coefficient tower.
    """
    c = symplectic_basis(s)
    lam = exterior_square(inverse(c))
    to_std = matmul(lam, s.perp_basis)
    half = Fraction(1, 2)
    w01, w02, w03, _, w13, w23 = to_std
    x1 = [(a + b) * half for a, b in zip(w02, w13)]
    x2 = [(a - b) * half / i_unit for a, b in zip(w02, w13)]
    return [list(w01), x1, x2, list(w03), list(w23)]


def standard_quadric_value(x):
    return x[0] * x[4] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3]


def apply_matrix(m, coords):
    out = []
    for row in m:
        acc = Poly()
        for a, c in zip(row, coords):
            if a and c:
                acc = acc + c.scale(a)
        out.append(acc)
    return out
