"""Exact V-polytopes: vertex extraction and Minkowski sums."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lp import feasible_point

Point = tuple


def as_point(p: Iterable) -> Point:
    return tuple(Fraction(x) for x in p)


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: frozenset

    def sorted_vertices(self) -> list[Point]:
        return sorted(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def translate(self, t: Sequence) -> "Polytope":
        t = as_point(t)
        if len(t) != self.dim:
            raise ValueError("translation has wrong dimension")
        return Polytope(self.dim, frozenset(tuple(a + b for a, b in zip(v, t)) for v in self.vertices))

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "vertices": [[fmt_rational(x) for x in v] for v in self.sorted_vertices()]}

    @classmethod
    def from_json(cls, data: dict) -> "Polytope":
        verts = frozenset(tuple(Fraction(x) for x in v) for v in data["vertices"])
        return cls(int(data["dim"]), verts)


def in_convex_hull(p: Point, others: Sequence[Point]) -> bool:
    """Is p a convex combination of the points in others?"""
    if not others:
        return False
    d = len(p)
    A = [[q[k] for q in others] for k in range(d)]
    A.append([1] * len(others))
    return feasible_point(A, list(p) + [1]) is not None


def _surely_extreme(pts: list[Point], rng: random.Random, rounds: int) -> set[Point]:
    """Points that uniquely maximise some random linear functional. These are vertices."""
    d = len(pts[0])
    found = set()
    for _ in range(rounds):
        c = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(d)]
        vals = [sum(ci * x for ci, x in zip(c, p)) for p in pts]
        top = max(vals)
        winners = [p for p, v in zip(pts, vals) if v == top]
        if len(winners) == 1:
            found.add(winners[0])
    return found


_HULL_CACHE: dict[frozenset, frozenset] = {}


def hull_vertices(points: Iterable[Sequence]) -> Polytope:
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points have inconsistent dimensions")
    key = frozenset(pts)
    cached = _HULL_CACHE.get(key)
    if cached is not None:
        return Polytope(d, cached)
    known = _surely_extreme(pts, random.Random(0), rounds=min(8 * len(pts), 400))
    keep = list(pts)
    for p in pts:
        if p in known:
            continue
        # cheap test against known vertices first; a hit proves p redundant
        if in_convex_hull(p, sorted(known)):
            keep.remove(p)
            continue
        rest = [q for q in keep if q != p]
        if in_convex_hull(p, rest):
            keep = rest
    _HULL_CACHE[key] = frozenset(keep)
    return Polytope(d, frozenset(keep))


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.dim != Q.dim:
        raise ValueError(f"dimension mismatch: {P.dim} vs {Q.dim}")
    return hull_vertices(tuple(a + b for a, b in zip(v, w)) for v in P.vertices for w in Q.vertices)


def normal_cone_weight(v: Point, vertices: Iterable[Point]) -> tuple[Fraction, ...] | None:
    """A weight c with <c, v> >= <c, u> + 1 for every other vertex u, or None.

    Such a c lies in the interior of the normal cone at v.
    """
    v = as_point(v)
    others = [as_point(u) for u in vertices if as_point(u) != v]
    d = len(v)
    if not others:
        return tuple(Fraction(0) for _ in range(d))
    # variables: c+ (d), c- (d), one slack per other vertex
    A, b = [], []
    k = len(others)
    for i, u in enumerate(others):
        diff = [a - c for a, c in zip(v, u)]
        row = diff + [-x for x in diff] + [Fraction(-int(j == i)) for j in range(k)]
        A.append(row)
        b.append(1)
    x = feasible_point(A, b)
    if x is None:
        return None
    return tuple(x[i] - x[d + i] for i in range(d))


@dataclass(frozen=True)
class BlockHyperplaneWitness:
    """P1 lies in {x_i = 0 for i > pivot, sum_{i<=pivot} x_i = N1};
    P2 lies in {x_i = 0 for i < pivot, sum_{i>=pivot} x_i = N2}."""

    pivot: int
    N1: Fraction
    N2: Fraction


class WitnessViolation(ValueError):
    pass


def _check_witness(P1: Polytope, P2: Polytope, w: BlockHyperplaneWitness):
    for v in P1.vertices:
        if any(v[i] for i in range(w.pivot + 1, P1.dim)) or sum(v[:w.pivot + 1]) != w.N1:
            raise WitnessViolation(f"vertex {v} of P1 is outside its hyperplane")
    for v in P2.vertices:
        if any(v[i] for i in range(w.pivot)) or sum(v[w.pivot:]) != w.N2:
            raise WitnessViolation(f"vertex {v} of P2 is outside its hyperplane")


@dataclass
class LemmaReport:
    passed: bool
    sum_vertices: int
    pair_count: int
    counterexample: tuple | None = None
    collisions: int = 0

    def to_json(self) -> dict:
        out = {"passed": self.passed, "sum_vertices": self.sum_vertices,
               "vertex_pairs": self.pair_count, "collisions": self.collisions}
        if self.counterexample is not None:
            out["counterexample"] = [[fmt_rational(x) for x in v] for v in self.counterexample]
        return out


def vertex_sum_lemma_check(P1: Polytope, P2: Polytope, w: BlockHyperplaneWitness) -> LemmaReport:
    """Check that the vertices of P1 + P2 are exactly the pairwise vertex sums."""
    if P1.dim != P2.dim:
        raise ValueError("dimension mismatch")
    _check_witness(P1, P2, w)
    sums = {}
    for v in sorted(P1.vertices):
        for u in sorted(P2.vertices):
            sums.setdefault(tuple(a + b for a, b in zip(v, u)), (v, u))
    collisions = len(P1) * len(P2) - len(sums)
    total = minkowski_sum(P1, P2)
    missing = sorted(set(sums) - total.vertices)
    passed = not missing and collisions == 0 and total.vertices <= set(sums)
    cex = sums[missing[0]] if missing else None
    return LemmaReport(passed, len(total), len(P1) * len(P2), cex, collisions)
