"""Maximal minors of polynomial matrices (Plucker coordinates of wedges)."""

from itertools import combinations


def wedge_minors(rows, k=None):
    """All k x k minors of a k x (n+1) matrix, columns in lex subset order.

    Division free: minors of the first j rows on every j-subset of columns
    are built from those of the first j-1 rows by Laplace expansion along
    row j, so each entry only needs ring operations.
    """
    rows = [list(r) for r in rows]
    if k is None:
        k = len(rows)
    if k != len(rows):
        raise ValueError("expected %d rows, got %d" % (k, len(rows)))
    ncols = len(rows[0])
    if not 1 <= k <= ncols:
        raise ValueError("need 1 <= k <= number of columns")
    prev = {(c,): rows[0][c] for c in range(ncols)}
    for j in range(1, k):
        row = rows[j]
        cur = {}
        for subset in combinations(range(ncols), j + 1):
            acc = None
            # expand along the last row: sign (-1)^(j + pos)
            for pos, c in enumerate(subset):
                minor = prev[subset[:pos] + subset[pos + 1:]]
                term = row[c] * minor
                if (j + pos) % 2:
                    term = -term
                acc = term if acc is None else acc + term
            cur[subset] = acc
        prev = cur
    return [prev[s] for s in combinations(range(ncols), k)]


def derivative_rows(coords, k):
    """[F, F', ..., F^(k-1)] for a vector of Polys."""
    rows = [list(coords)]
    for _ in range(k - 1):
        rows.append([p.deriv() for p in rows[-1]])
    return rows


def column_subsets(ncols, k):
    return list(combinations(range(ncols), k))
