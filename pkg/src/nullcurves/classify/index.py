"""Index coincidences between the Taylor gaps at two branch points.

For branch orders a at p and b at q of a totally ramified contact curve of
degree d, the gap sets seen from p and from q (written in the coordinate of p)
are

    A = {0, a+1, a+2, 2a+3},    B = {d-(2b+3), d-(b+2), d-(b+1), d}.

When they share at least two elements the curve is either f_{d'} (d = 2d'-1)
or one of the normal forms of the certificate registry applies.  A match
"(i k)(j l)" means A[i] = B[k] and A[j] = B[l] (1-based, i < j, k < l).
"""

from itertools import combinations


class IndexConditionError(ValueError):
    """Precondition violation for the index condition."""


def gap_sets(d, a, b):
    return [0, a + 1, a + 2, 2 * a + 3], [d - (2 * b + 3), d - (b + 2), d - (b + 1), d]


def index_condition(d, a, b, check_bounds=True):
    """(holds, [pattern labels]) for branch orders a, b at degree d."""
    if a < 1 or b < 1:
        raise IndexConditionError("need a, b >= 1")
    if check_bounds and (2 * a + 3 > d or 2 * b + 3 > d):
        raise IndexConditionError("need 2a+3 <= d and 2b+3 <= d")
    A, B = gap_sets(d, a, b)
    pairs = [(i, k) for i in range(4) for k in range(4) if A[i] == B[k]]
    matches = []
    for (i, k), (j, l) in combinations(pairs, 2):
        if i < j and k < l:
            matches.append("(%d %d)(%d %d)" % (i + 1, k + 1, j + 1, l + 1))
    return len(pairs) >= 2, matches


def _fd(d, a, b):
    ok = d % 2 == 1 and 2 * a == d - 3 and a == b
    return ("FD_CURVE", "f_%d" % ((d + 1) // 2)) if ok else ("INCONSISTENT", "expected a = b = (d-3)/2")


def _cont(d, a, b):
    if 2 * max(a, b) > d - 3:
        return "CONSTRAINT_VIOLATION", "r1 > (d-3)/2"
    return "INCONSISTENT", "expected a violated one-point bound"


def _abel(d, a, b):
    # 2a + 3 < d with the pair bound broken, or the degree forced <= 5
    for x, y in ((a, b), (b, a)):
        if 2 * x + 3 < d and 2 * x + y > d - 4:
            return "CONSTRAINT_VIOLATION", "2*%d + %d > d-4" % (x, y)
    if d <= 5:
        return "CONSTRAINT_VIOLATION", "degree <= 5 with more than two branch points"
    return "INCONSISTENT", "expected a violated pair bound"


def _absurd(d, a, b):
    return "CONSTRAINT_VIOLATION", "linear system has no solution with a, b >= 1"


def _cert(case_id, degree_of, a_of, b_of, swap=False):
    def check(d, a, b):
        x, y = (b, a) if swap else (a, b)
        for dp in range(1, d + 1):
            if degree_of(dp) == d:
                if (x, y) == (a_of(dp), b_of(dp)):
                    return "CONTRADICTION", "%s at d'=%d" % (case_id, dp)
        return "INCONSISTENT", "no d' fits %s" % case_id
    return check


_C1142 = _cert("EXC2_1142", lambda k: 4 * k + 3, lambda k: k - 1, lambda k: 2 * k)
_C1143 = _cert("EXC2_1143", lambda k: 4 * k + 1, lambda k: k - 1, lambda k: 2 * k - 1)
_C2142 = _cert("EXC2_2142", lambda k: 3 * k, lambda k: k - 2, lambda k: k - 1)
_C2143 = _cert("EXC2_2143", lambda k: 3 * k + 1, lambda k: k - 1, lambda k: k - 1)
_C3142 = _cert("EXC2_3142", lambda k: 3 * k + 2, lambda k: k - 1, lambda k: k - 1)

# Outcome of every pattern, keyed by label.  Swapped cases reuse a normal
# form with the roles of p and q exchanged.
PATTERN_OUTCOMES = {
    "(1 1)(2 2)": _fd, "(1 1)(2 3)": _cont, "(1 1)(2 4)": _cont,
    "(1 1)(3 2)": _abel, "(1 1)(3 3)": _fd, "(1 1)(3 4)": _cont,
    "(1 1)(4 2)": _C1142, "(1 1)(4 3)": _C1143, "(1 1)(4 4)": _fd,
    "(2 1)(3 2)": _absurd, "(2 1)(3 3)": _absurd, "(2 1)(3 4)": _cont,
    "(2 1)(4 2)": _C2142, "(2 1)(4 3)": _C2143,
    "(2 1)(4 4)": _cert("EXC2_1143", lambda k: 4 * k + 1, lambda k: k - 1,
                        lambda k: 2 * k - 1, swap=True),
    "(2 2)(3 3)": _fd, "(2 2)(3 4)": _cont, "(2 2)(4 3)": _cont, "(2 2)(4 4)": _fd,
    "(3 1)(4 2)": _C3142,
    "(3 1)(4 3)": _cert("EXC2_2142", lambda k: 3 * k, lambda k: k - 2, lambda k: k - 1,
                        swap=True),
    "(3 1)(4 4)": _cert("EXC2_1142", lambda k: 4 * k + 3, lambda k: k - 1, lambda k: 2 * k,
                        swap=True),
    "(3 2)(4 3)": _absurd, "(3 2)(4 4)": _abel,
    "(3 3)(4 4)": _fd,
}

for _k in (2, 3):
    for _l in ((2, 3), (2, 4), (3, 4)):
        PATTERN_OUTCOMES.setdefault("(1 %d)(%d %d)" % (_k, _l[0], _l[1]), _cont)
for _pat in ("(2 3)(3 4)", "(2 3)(4 4)"):
    PATTERN_OUTCOMES.setdefault(_pat, _cont)


def classify_pair(d, a, b):
    """Per-pattern outcomes and an overall verdict for a holding triple."""
    holds, matches = index_condition(d, a, b)
    if not holds:
        raise IndexConditionError("index condition does not hold")
    results = []
    for label in matches:
        rule = PATTERN_OUTCOMES.get(label)
        if rule is None:
            results.append({"pattern": label, "verdict": "UNMAPPED", "detail": ""})
            continue
        verdict, detail = rule(d, a, b)
        results.append({"pattern": label, "verdict": verdict, "detail": detail})
    kinds = {r["verdict"] for r in results}
    for overall in ("UNMAPPED", "INCONSISTENT", "FD_CURVE", "CONTRADICTION",
                    "CONSTRAINT_VIOLATION"):
        if overall in kinds:
            break
    return {"d": d, "a": a, "b": b, "verdict": overall, "patterns": results}


def brute_force(max_degree=60):
    """classify_pair over every holding triple with d <= max_degree."""
    out = []
    for d in range(5, max_degree + 1):
        top = (d - 3) // 2
        for a in range(1, top + 1):
            for b in range(1, top + 1):
                holds, _ = index_condition(d, a, b)
                if holds:
                    out.append(classify_pair(d, a, b))
    return out
