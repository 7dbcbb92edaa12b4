"""Row reduction over the rationals. Rows are sequences of Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = tuple


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[tuple[Row, ...], tuple[int, ...]]:
    """Reduced row echelon form, zero rows dropped. Returns (rows, pivots)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    for row in mat:
        if len(row) != ncols:
            raise ValueError("row length does not match column count")
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        piv = mat[r][c]
        if piv != 1:
            mat[r] = [x / piv for x in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r:
                f = mat[i][c]
                if f:
                    mat[i] = [a - f * b for a, b in zip(mat[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> tuple[Row, ...]:
    """Basis of {v : rows . v = 0}, one basis vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return tuple(basis)
