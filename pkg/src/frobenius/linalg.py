"""Exact rational linear algebra on dense list-of-lists matrices.

Matrices are plain ``list[list[Fraction | int]]`` and vectors are
``list[Fraction]``.  Nothing here ever touches floating point.  Pivoting
is deterministic: the pivot for a column is the first row (in order) with
a nonzero entry.

>>> rank([[0, 2], [-2, 0]])
2
>>> inverse([[0, 2], [-2, 0]])
[[Fraction(0, 1), Fraction(-1, 2)], [Fraction(1, 2), Fraction(0, 1)]]
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import SingularMatrix

__all__ = [
    "zeros",
    "identity",
    "transpose",
    "matmul",
    "matvec",
    "vecmat",
    "is_skew",
    "rank",
    "rref",
    "kernel_basis",
    "inverse",
    "solve_row",
    "solve",
    "SpanCoordinates",
]


def zeros(rows, cols):
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(m, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in m]


def vecmat(v, m):
    cols = len(m[0]) if m else 0
    out = [Fraction(0)] * cols
    for coeff, row in zip(v, m):
        if coeff:
            for j, x in enumerate(row):
                if x:
                    out[j] += coeff * x
    return out


def is_skew(m):
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[a][b] == -m[b][a] for a in range(n) for b in range(a, n)
    )


def _integer_rows(m):
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    rows = []
    for row in m:
        if all(type(x) is int for x in row):
            rows.append(list(row))
            continue
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        rows.append([int(Fraction(x) * den) for x in row])
    return rows


def rank(m):
    """Row rank by fraction-free (Bareiss) elimination over the integers."""
    if not m or not m[0]:
        return 0
    a = _integer_rows(m)
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            ri = a[i]
            f = ri[c]
            if f:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j] - f * pr[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def rref(m):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` holds only the nonzero rows
    and ``pivots[k]`` is the pivot column of ``rows[k]``.
    """
    a = [[Fraction(x) for x in row] for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        pr = [x * inv for x in a[r]]
        a[r] = pr
        nz = [j for j in range(c, ncols) if pr[j]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                ri = a[i]
                for j in nz:
                    ri[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def kernel_basis(m, cols=None):
    """Basis of the right null space ``{v : m v = 0}``.

    ``cols`` must be given when ``m`` has no rows.  One vector is produced
    per free column, with a 1 in that column.
    """
    if cols is None:
        cols = len(m[0]) if m else 0
    if not m:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


def inverse(m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse needs a square matrix")
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise SingularMatrix(f"matrix of size {n} is singular")
    return [row[n:] for row in rows]


def solve(m, b):
    """Solve ``m x = b`` for square nonsingular ``m``."""
    n = len(m)
    aug = [list(row) + [b[i]] for i, row in enumerate(m)]
    rows, pivots = rref(aug)
    if len(rows) < n or pivots[:n] != list(range(n)) or (len(pivots) > n):
        raise SingularMatrix(f"system of size {n} is singular")
    return [row[n] for row in rows]


def solve_row(v, m):
    """Return the row vector ``x`` with ``x m = v``."""
    return solve(transpose(m), v)


class SpanCoordinates:
    """Coordinates of vectors relative to a fixed linearly independent list.

    >>> sc = SpanCoordinates([[1, 1, 0], [0, 1, 1]])
    >>> sc.coordinates([1, 2, 1])
    [Fraction(1, 1), Fraction(1, 1)]
    >>> sc.coordinates([1, 0, 0]) is None
    True
    """

    def __init__(self, vectors):
        self.dim = len(vectors)
        self.length = len(vectors[0]) if vectors else 0
        # Row-reduce [vectors | I]; the right block records the combination.
        aug = [
            [Fraction(x) for x in vec] + [Fraction(int(i == j)) for j in range(self.dim)]
            for i, vec in enumerate(vectors)
        ]
        rows, pivots = rref(aug) if aug else ([], [])
        if len(rows) != self.dim or (pivots and pivots[-1] >= self.length):
            raise ValueError("vectors are linearly dependent")
        self._rows = [row[: self.length] for row in rows]
        self._combos = [row[self.length :] for row in rows]
        self._pivots = pivots

    def residual(self, w):
        """Component of ``w`` left over after reducing against the span."""
        w = [Fraction(x) for x in w]
        for row, p in zip(self._rows, self._pivots):
            f = w[p]
            if f:
                for j, x in enumerate(row):
                    if x:
                        w[j] -= f * x
        return w

    def coordinates(self, w):
        """Coefficients ``c`` with ``sum c_k vectors[k] == w``, or None."""
        w = [Fraction(x) for x in w]
        d = [w[p] for p in self._pivots]
        if any(self.residual(w)):
            return None
        return vecmat(d, self._combos) if self.dim else []
