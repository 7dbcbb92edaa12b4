"""Exact feasibility for {x >= 0 : A x = b} by phase-one simplex with Bland's rule."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """A basic feasible solution of A x = b, x >= 0, or None if infeasible."""
    m = len(A)
    n = len(A[0]) if m else 0
    if len(b) != m:
        raise ValueError("right-hand side length mismatch")
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        # artificial variable i lives in column n + i
        rows.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m

    # reduced costs of the phase-one objective: minimise the sum of artificials
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            # unbounded phase-one objective cannot happen (it is bounded below by 0)
            raise AssertionError("phase-one objective unbounded")
        _pivot(rows, cost, best[1], enter)
        basis[best[1]] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][width]
    return x


def _pivot(rows, cost, r, c):
    prow = rows[r]
    piv = prow[c]
    if piv != 1:
        prow[:] = [x / piv for x in prow]
    support = [j for j, x in enumerate(prow) if x]
    for row in rows + [cost]:
        if row is not prow and row[c]:
            f = row[c]
            for j in support:
                row[j] -= f * prow[j]
