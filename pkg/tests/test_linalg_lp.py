from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from statepoly.linalg import nullspace, rank, rref
from statepoly.lp import feasible_point

small = st.integers(-4, 4)
matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_rref_matches_sympy(rows):
    ncols = len(rows[0])
    ours, pivots = rref(rows, ncols)
    ref, ref_piv = sympy.Matrix(rows).rref()
    assert pivots == tuple(ref_piv)
    assert [list(r) for r in ours] == [[Fraction(int(x.p), int(x.q)) for x in ref.row(i)]
                                       for i in range(len(pivots))]


@given(matrices)
def test_nullspace_is_kernel(rows):
    ncols = len(rows[0])
    kernel = nullspace(rows, ncols)
    assert len(kernel) == ncols - rank(rows, ncols)
    for v in kernel:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@settings(max_examples=60)
@given(matrices, st.lists(st.integers(0, 3), min_size=5, max_size=5))
def test_feasible_point_finds_planted_solution(rows, x0):
    x0 = x0[:len(rows[0])]
    b = [sum(a * x for a, x in zip(r, x0)) for r in rows]
    x = feasible_point(rows, b)
    assert x is not None
    assert all(v >= 0 for v in x)
    assert [sum(a * v for a, v in zip(r, x)) for r in rows] == b


def test_feasible_point_detects_infeasible():
    # x + y = 1 and x + y = 2
    assert feasible_point([[1, 1], [1, 1]], [1, 2]) is None
    # x - y = -1 with x, y >= 0 is fine; -x - y = 1 is not
    assert feasible_point([[1, -1]], [-1]) is not None
    assert feasible_point([[-1, -1]], [1]) is None


def test_feasible_point_degenerate_cycle_guard():
    # a classic degenerate system; Bland's rule must terminate
    A = [[Fraction(1, 2), Fraction(-11, 2), Fraction(-5, 2), 9, 1, 0, 0],
         [Fraction(1, 2), Fraction(-3, 2), Fraction(-1, 2), 1, 0, 1, 0],
         [1, 0, 0, 0, 0, 0, 1]]
    assert feasible_point(A, [0, 0, 1]) is not None
