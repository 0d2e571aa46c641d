"""Ramification-divisor shapes of totally ramified contact curves.

A shape is the multiset of branch orders r_1(f, p) > 0 of a contact curve of
degree d in P^3 with r_1(f) = d - 3 and r_2(f) = 0.  Shapes are filtered by
the inequalities below and then by the wedge-coefficient certificates.

* one-point bound: r_1(p) <= (d-3)/2 at every point (so at least two points)
* even degree bound: r_1(p) <= d/2 - 3
* pair bound: 2 r_1(p) + r_1(q) <= d - 4 whenever 2 r_1(p) + 3 < d, q != p
"""

from dataclasses import dataclass, field

from .certificates import CASES, builtin_certificate


def partitions(n, largest=None):
    """Partitions of n as non-increasing tuples, in reverse lex order."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


@dataclass
class ConstraintVerdict:
    shape: tuple
    degree: int
    status: str = "ADMISSIBLE"
    rule: str = "NONE"
    witnesses: list = field(default_factory=list)
    note: str = ""

    def to_json(self):
        return {"shape": list(self.shape), "degree": self.degree, "status": self.status,
                "rule": self.rule, "witnesses": self.witnesses, "note": self.note}


def _inequality_witnesses(shape, d):
    out = []
    bound = (d - 3) // 2
    for a in sorted(set(shape), reverse=True):
        if a > bound:
            out.append({"rule": "LEMMA_CONT", "instance": "r1(p) = %d > (d-3)/2 = %s"
                        % (a, _half(d - 3))})
    if len(shape) == 1 and not out:
        out.append({"rule": "LEMMA_CONT", "instance": "single branch point"})
    if d % 2 == 0:
        for a in sorted(set(shape), reverse=True):
            if a > d // 2 - 3:
                out.append({"rule": "LEMMA_ABEL", "instance":
                            "even degree: r1(p) = %d > d/2 - 3 = %d" % (a, d // 2 - 3)})
    for i, a in enumerate(shape):
        if 2 * a + 3 >= d:
            continue
        for j, b in enumerate(shape):
            if i != j and 2 * a + b > d - 4:
                inst = "2*%d + %d = %d > d-4 = %d" % (a, b, 2 * a + b, d - 4)
                if all(w["instance"] != inst for w in out):
                    out.append({"rule": "LEMMA_ABEL", "instance": inst})
    return out


def _half(n):
    return str(n // 2) if n % 2 == 0 else "%d/2" % n


def certificate_witnesses(shape, d):
    """Section certificates whose branch pair fits inside the shape."""
    out = []
    for case_id, spec in CASES.items():
        if spec.applies_to_degree != d:
            continue
        a, b = spec.branch_pair
        rest = list(shape)
        if a in rest:
            rest.remove(a)
            if b in rest:
                cert = builtin_certificate(case_id)
                if cert.verdict == "CONTRADICTION":
                    out.append({"rule": "CERTIFICATE(%s)" % case_id,
                                "instance": "z^%d*(%s) has < %d nonzero roots" % (
                                    cert.z_power, cert.h.to_string(),
                                    cert.required_nonzero_roots)})
    return out


def admissible_shapes(d, use_certificates=True):
    """One verdict per partition of d - 3 (d >= 4)."""
    if d < 4:
        raise ValueError("need d >= 4")
    verdicts = []
    for shape in partitions(d - 3):
        v = ConstraintVerdict(shape, d)
        ineq = _inequality_witnesses(shape, d)
        certs = certificate_witnesses(shape, d) if use_certificates else []
        v.witnesses = ineq + certs
        if ineq:
            v.status, v.rule = "EXCLUDED", ineq[0]["rule"]
        elif certs:
            v.status, v.rule = "EXCLUDED", certs[0]["rule"]
        if v.status == "ADMISSIBLE" and len(shape) == 2 and d % 2 == 1 and shape[0] == shape[1]:
            v.note = "realized by f_%d" % ((d + 1) // 2)
        elif v.status == "ADMISSIBLE":
            v.note = "OPEN"
        verdicts.append(v)
    return verdicts


def degree_report(null_degree):
    """Status of unbranched null curves of a given degree in Q^3.

    Such a curve is the dual of a totally ramified contact curve of degree
    null_degree - 1.
    """
    d = null_degree - 1
    verdicts = admissible_shapes(d)
    alive = [v for v in verdicts if v.status == "ADMISSIBLE"]
    if not alive:
        status = "NONEXISTENT"
    elif all(v.note.startswith("realized") for v in alive):
        status = "REDUCES_TO_FD"
    else:
        status = "OPEN"
    out = {"null_degree": null_degree, "contact_degree": d, "status": status,
           "admissible": [list(v.shape) for v in alive]}
    if status == "REDUCES_TO_FD":
        out["reduces_to"] = "dual of f_%d" % ((d + 1) // 2)
    return out
