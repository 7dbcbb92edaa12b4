import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from statepoly.polytope import (BlockHyperplaneWitness, Polytope, WitnessViolation,
                                hull_vertices, in_convex_hull, minkowski_sum,
                                normal_cone_weight, vertex_sum_lemma_check)
from conftest import random_conforming_pair
from oracles import vertices

points3 = st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=1, max_size=9)


@settings(max_examples=25, deadline=None)
@given(points3)
def test_hull_matches_sympy_oracle(pts):
    assert hull_vertices(pts).vertices == vertices(pts)


def test_hull_of_square_with_interior_and_edge_points():
    pts = [(0, 0), (2, 0), (0, 2), (2, 2), (1, 1), (1, 0), (0, 1)]
    assert hull_vertices(pts).sorted_vertices() == [(0, 0), (0, 2), (2, 0), (2, 2)]


def test_hull_rejects_bad_input():
    with pytest.raises(ValueError):
        hull_vertices([])
    with pytest.raises(ValueError):
        hull_vertices([(0, 0), (1, 0, 0)])


def test_quadrilateral():
    seg1 = hull_vertices([(2, 0, 0), (0, 2, 0)])
    seg2 = hull_vertices([(0, 2, 0), (0, 0, 2)])
    total = minkowski_sum(seg1, seg2)
    assert total.vertices == {(2, 2, 0), (2, 0, 2), (0, 4, 0), (0, 2, 2)}
    report = vertex_sum_lemma_check(seg1, seg2, BlockHyperplaneWitness(1, 2, 2))
    assert report.passed and report.sum_vertices == 4


def test_minkowski_with_point_translates():
    P = hull_vertices([(0, 0), (1, 0), (0, 1)])
    Q = hull_vertices([(5, -2)])
    assert minkowski_sum(P, Q) == P.translate((5, -2))


def test_minkowski_doubling_simplex():
    P = hull_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert minkowski_sum(P, P).vertices == {tuple(2 * x for x in v) for v in P.vertices}


def test_minkowski_dimension_mismatch():
    with pytest.raises(ValueError):
        minkowski_sum(hull_vertices([(0, 0)]), hull_vertices([(0, 0, 0)]))


small3 = st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=1, max_size=3)


@settings(max_examples=15, deadline=None)
@given(small3, small3)
def test_minkowski_vertex_count_bound_and_decomposition(a, b):
    P, Q = hull_vertices(a), hull_vertices(b)
    S = minkowski_sum(P, Q)
    assert len(S) <= len(P) * len(Q)
    sums = {tuple(x + y for x, y in zip(v, w)) for v in P.vertices for w in Q.vertices}
    assert S.vertices <= sums
    assert S.vertices == vertices(sums)


def test_lemma_single_point():
    P1 = hull_vertices([(3, 0, 0)])
    P2 = hull_vertices([(0, 1, 1), (0, 2, 0), (0, 0, 2)])
    assert vertex_sum_lemma_check(P1, P2, BlockHyperplaneWitness(0, 3, 2)).passed


def test_lemma_witness_violation():
    P1 = hull_vertices([(1, 1, 0), (0, 1, 1)])
    P2 = hull_vertices([(0, 1, 1)])
    with pytest.raises(WitnessViolation):
        vertex_sum_lemma_check(P1, P2, BlockHyperplaneWitness(1, 2, 2))


def test_lemma_can_fail_off_hypothesis():
    # same plane for both: vertex sums collide
    P1 = hull_vertices([(2, 0), (0, 2)])
    report = vertex_sum_lemma_check(P1, P1, BlockHyperplaneWitness(1, 2, 2)) \
        if False else None
    # with pivot 1 in dimension 2 the second polytope must sit on x1 = N2 only,
    # so a genuine segment in both coordinates violates the witness
    with pytest.raises(WitnessViolation):
        vertex_sum_lemma_check(P1, P1, BlockHyperplaneWitness(1, 2, 2))
    assert report is None


@pytest.mark.parametrize("seed", range(25))
def test_lemma_random_conforming_pairs(seed):
    P1, P2, w = random_conforming_pair(random.Random(seed))
    report = vertex_sum_lemma_check(P1, P2, w)
    assert report.passed, report.to_json()
    assert report.sum_vertices == len(P1) * len(P2)


def test_polytope_json_round_trip():
    P = hull_vertices([(Fraction(1, 2), 0), (0, 3), (2, 2)])
    data = P.to_json()
    assert data["vertices"][0] == ["0", "3"]
    assert ["1/2", "0"] in data["vertices"]
    assert Polytope.from_json(data) == P


def test_translate_dimension_check():
    with pytest.raises(ValueError):
        hull_vertices([(0, 0)]).translate((1, 2, 3))


@settings(max_examples=25, deadline=None)
@given(points3)
def test_normal_cone_weight_selects_vertex(pts):
    P = hull_vertices(pts)
    for v in P.vertices:
        c = normal_cone_weight(v, P.vertices)
        assert c is not None
        best = sum(a * b for a, b in zip(c, v))
        assert all(sum(a * b for a, b in zip(c, u)) <= best - 1 for u in P.vertices if u != v)


def test_in_convex_hull():
    assert in_convex_hull((1, 1), [(0, 0), (2, 2)])
    assert not in_convex_hull((1, 0), [(0, 0), (2, 2)])
    assert not in_convex_hull((1, 0), [])
