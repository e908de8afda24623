"""Small dense exact linear algebra over Fraction / GaussianRational entries.

Matrices are lists of rows.  Everything here is fraction-free of floats and
intended for the tiny sizes (n <= 8, systems of a few hundred rows) used in
this package.
"""
from __future__ import annotations

from fractions import Fraction


def zeros(rows: int, cols: int):
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("shape mismatch in matmul")
    cols = len(b[0]) if b else 0
    return [
        [sum((row[t] * b[t][j] for t in range(inner)), Fraction(0)) for j in range(cols)]
        for row in a
    ]


def matvec(a, x):
    if any(len(row) != len(x) for row in a):
        raise ValueError("shape mismatch in matvec")
    return [sum((r * v for r, v in zip(row, x)), Fraction(0)) for row in a]


def _row_reduce(m):
    """In-place reduced row echelon form; returns pivot columns."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((k for k in range(r, rows) if m[k][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for k in range(rows):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
    return pivots


def solve(a, b):
    """One solution of ``a x = b`` (free variables set to 0), or None.

    ``a`` may be rectangular; an inconsistent system returns None.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    pivots = _row_reduce(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = aug[r][n]
    return x


def rank(a) -> int:
    return len(_row_reduce([list(row) for row in a]))


def det(a):
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    m = [list(row) for row in a]
    result = Fraction(1)
    for c in range(n):
        p = next((k for k in range(c, n) if m[k][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result = result * m[c][c]
        inv = 1 / m[c][c]
        for k in range(c + 1, n):
            if m[k][c]:
                f = m[k][c] * inv
                m[k] = [a - f * b for a, b in zip(m[k], m[c])]
    return result


def inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    pivots = _row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in aug]
