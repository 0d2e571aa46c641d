"""Ramification divisors from the contents of derivative wedges.

With T_k = F ^ F' ^ ... ^ F^(k-1) and g_k its content, the local
multiplicity at a finite point is

    r_i(p) = ord_p(g_{i+1}) - 2 ord_p(g_i) + ord_p(g_{i-1}),

since ord_p(T_k) = sum_{j<k} nu_j(p) - k(k-1)/2 for the gap sequence
nu_0 < nu_1 < ... at p.  At infinity the same identity holds for the
homogeneous model, where ord_inf(T_k) = k(d-k+1) - deg T_k.
"""

from ..poly import Poly
from .divisor import Divisor
from .projective import CurveError


def wedge_data(f, k):
    """(content g_k, degree of T_k, order of T_k at infinity)."""
    if k == 0:
        return Poly([1]), 0, 0
    t = f.wedge(k)
    nonzero = [p for p in t if p]
    if not nonzero:
        raise CurveError("degenerate wedge of order %d" % k)
    from ..poly import content_gcd
    g = content_gcd(nonzero)
    deg = max(p.degree for p in nonzero)
    return g, deg, k * (f.degree - k + 1) - deg


def ramification_divisor(f, i):
    """R_i(f) for 1 <= i <= n (requires T_{i+1} not identically zero)."""
    n = f.ambient_dim
    if not 1 <= i <= n:
        raise CurveError("need 1 <= i <= n")
    g_prev, _, e_prev = wedge_data(f, i - 1)
    g_cur, _, e_cur = wedge_data(f, i)
    g_next, _, e_next = wedge_data(f, i + 1)
    num = g_next * g_prev
    den = g_cur * g_cur
    q, r = divmod(num, den)
    if r:
        raise CurveError("wedge contents are not compatible (internal error)")
    inf_mult = e_next - 2 * e_cur + e_prev
    if inf_mult < 0:
        raise CurveError("negative multiplicity at infinity (internal error)")
    if q.degree == 0:
        return Divisor({}, inf_mult)
    return Divisor.of_poly(q, inf_mult)


def ramification_degrees(f, upto=None):
    """[r_1, ..., r_upto] as integers."""
    upto = f.ambient_dim if upto is None else upto
    return [ramification_divisor(f, i).degree() for i in range(1, upto + 1)]


def wedge_degree_formula(f, k, r=None):
    """Predicted deg of the k-th associated curve:
    k(d-k+1) - sum_{l<k} (k-l) r_l."""
    if r is None:
        r = ramification_degrees(f, k - 1) if k > 1 else []
    return k * (f.degree - k + 1) - sum((k - l) * r[l - 1] for l in range(1, k))
