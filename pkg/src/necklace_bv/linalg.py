"""Exact Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction


class SingularMatrixError(ArithmeticError):
    pass


def rref(rows):
    """Reduced row echelon form.  Returns ``(R, pivot_columns)``."""
    R = [[Fraction(x) for x in row] for row in rows]
    if not R:
        return R, []
    ncols = len(R[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def nullspace(rows, ncols: int | None = None, with_free: bool = False):
    """Basis of the right kernel; one vector per free column, in column order.

    Each basis vector is 1 at its own free column and 0 at every other free
    column.  With ``with_free`` the free columns are returned as well.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if rows:
        R, pivots = rref(rows)
    else:
        R, pivots = [], []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return (basis, free) if with_free else basis


def rank(rows) -> int:
    return len(rref(rows)[1]) if rows else 0


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(rows):
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise SingularMatrixError("matrix is not square")
    aug = [list(r) + e for r, e in zip(rows, identity(n))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in R]


def matmul(A, B):
    if not A:
        return []
    m = len(B[0]) if B else 0
    return [[sum((a * B[k][j] for k, a in enumerate(row) if a), Fraction(0))
             for j in range(m)] for row in A]
