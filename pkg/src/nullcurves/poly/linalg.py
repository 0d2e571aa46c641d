"""Dense linear algebra over exact fields (lists of lists)."""

from fractions import Fraction


def _zero_like(x):
    return x - x


def rref(matrix):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    m = [list(r) for r in matrix]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(matrix):
    return len(rref(matrix)[1])


def nullspace(matrix, ncols=None):
    """Basis of {x : M x = 0}, one vector per free column (reduced echelon)."""
    if ncols is None:
        ncols = len(matrix[0])
    red, pivots = rref(matrix) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def determinant(matrix):
    """Gaussian elimination determinant over a field."""
    m = [list(r) for r in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return _zero_like(m[0][0]) if n else Fraction(1)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det = det * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def inverse(matrix):
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), _zero_like(row[0]) if row else 0)
             for col in zip(*b)] for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), _zero_like(row[0])) for row in a]
