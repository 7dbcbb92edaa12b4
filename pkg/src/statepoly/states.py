"""States and state polytopes of Hilbert points, plus initial monomials.

A Q-subset of monomials is a state when the matching Q columns of the piece
matrix are independent, i.e. when the subset is a basis of the column matroid.
Bases are enumerated exactly by deletion/contraction on the RREF matrix, which
never enters a branch that cannot be completed to a basis.
"""

from __future__ import annotations

import os
from math import lcm
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .arith import Monomial, TermOrder
from .ideal import GradedPiece
from .linalg import nullspace, rref
from .polytope import Polytope, hull_vertices, normal_cone_weight

DEFAULT_BUDGET = 10 ** 7


class BudgetExceeded(RuntimeError):
    pass


def default_budget() -> int:
    env = os.environ.get("STATEPOLY_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# -- basis enumeration ---------------------------------------------------------

# a search node: (matrix rows in RREF over `cols`, remaining column labels, chosen labels)
Node = tuple


def _expand(node: Node) -> list[Node]:
    mat, cols, chosen = node
    first = mat[0]
    lead = next(j for j, x in enumerate(first) if x)
    # columns before `lead` are zero in every row (loops) and are never chosen
    rest_cols = cols[lead + 1:]
    children = [([row[lead + 1:] for row in mat[1:]], rest_cols, chosen + (cols[lead],))]
    tail = first[lead + 1:]
    k = next((j for j, x in enumerate(tail) if x), None)
    if k is not None:
        # deleting the pivot column keeps full rank; re-pivot the first row at k
        new0 = [x / tail[k] for x in tail]
        others = []
        for row in mat[1:]:
            r = row[lead + 1:]
            f = r[k]
            if f:
                r = [a - f * b for a, b in zip(r, new0)]
            others.append(r)
        pos = 0
        while pos < len(others) and next(j for j, x in enumerate(others[pos]) if x) < k:
            pos += 1
        others.insert(pos, new0)
        children.append((others, rest_cols, chosen))
    return children


def _dfs(nodes: list[Node], budget: int | None) -> Iterator[tuple]:
    stack = list(reversed(nodes))
    visited = 0
    while stack:
        node = stack.pop()
        visited += 1
        if budget is not None and visited > budget:
            raise BudgetExceeded(f"basis enumeration exceeded the budget of {budget} nodes")
        if not node[0]:
            yield node[2]
            continue
        stack.extend(reversed(_expand(node)))


def iter_bases(rows: Sequence[Sequence], ncols: int, budget: int | None = None) -> Iterator[tuple]:
    """Column-index tuples of all bases of the column matroid of a full-row-rank RREF matrix."""
    mat = [list(r) for r in rows]
    return _dfs([(mat, tuple(range(ncols)), ())], budget)


def _split(rows, ncols, parts: int) -> list[Node]:
    frontier = [([list(r) for r in rows], tuple(range(ncols)), ())]
    while len(frontier) < parts:
        inner = [n for n in frontier if n[0]]
        if not inner:
            break
        node = inner[0]
        frontier.remove(node)
        frontier.extend(_expand(node))
    return frontier


def _points_worker(args):
    nodes, columns, budget = args
    return _bases_to_points(_dfs(nodes, budget), columns)


def _bases_to_points(bases, columns) -> set:
    n = columns[0].n_vars
    out = set()
    for basis in bases:
        total = [0] * n
        for j in basis:
            for i, e in enumerate(columns[j].exps):
                total[i] += e
        out.add(tuple(total))
    return out


def _enumerate_points(rows, columns, budget, jobs) -> frozenset:
    if jobs <= 1 or not rows:
        return frozenset(_bases_to_points(iter_bases(rows, len(columns), budget), columns))
    nodes = _split(rows, len(columns), 4 * jobs)
    chunks = [nodes[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_points_worker, [(c, columns, budget) for c in chunks if c])
        out = set()
        for p in parts:
            out |= p
    return frozenset(out)


@dataclass(frozen=True)
class StateSet:
    points: frozenset
    degree: int
    Q: int
    n_vars: int

    def sorted_points(self) -> list[tuple]:
        return sorted(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return tuple(p) in self.points


_STATE_CACHE: dict[GradedPiece, frozenset] = {}
_DUAL_CACHE: dict[GradedPiece, frozenset] = {}


def states(piece: GradedPiece, budget: int | None = None, jobs: int = 1) -> StateSet:
    """All states of the Hilbert point of `piece` (exact, no sampling).

    The zero piece has the single state 0.
    """
    pts = _STATE_CACHE.get(piece)
    if pts is None:
        if budget is None:
            budget = default_budget()
        pts = _enumerate_points(piece.rows, piece.columns, budget, jobs)
        _STATE_CACHE[piece] = pts
    return StateSet(pts, piece.degree, piece.Q, piece.n_vars)


def dual_states(piece: GradedPiece, budget: int | None = None, jobs: int = 1) -> frozenset:
    """Exponent sums of the monomial bases of S_m / I_m.

    Computed from the annihilator of I_m: a set B of P monomials is a basis of
    the quotient iff the B columns of the annihilator matrix are independent.
    """
    pts = _DUAL_CACHE.get(piece)
    if pts is None:
        if budget is None:
            budget = default_budget()
        ann, _ = rref(nullspace(piece.rows, piece.N), piece.N)
        pts = _enumerate_points(ann, piece.columns, budget, jobs)
        _DUAL_CACHE[piece] = pts
    return pts


def clear_caches():
    _STATE_CACHE.clear()
    _DUAL_CACHE.clear()


# -- initial monomials -----------------------------------------------------------

@dataclass(frozen=True)
class InitialSelection:
    monomials: frozenset
    order: TermOrder

    def point(self, n_vars: int) -> tuple:
        total = [0] * n_vars
        for mono in self.monomials:
            for i, e in enumerate(mono.exps):
                total[i] += e
        return tuple(total)


def initial_monomials(piece: GradedPiece, order: TermOrder) -> InitialSelection:
    """Leading monomials of I_m: pivots after sorting columns greatest-first."""
    cols = piece.columns
    perm = sorted(range(len(cols)), key=lambda j: order.key(cols[j]), reverse=True)
    permuted = [[row[j] for j in perm] for row in piece.rows]
    _, pivots = rref(permuted, len(cols))
    return InitialSelection(frozenset(cols[perm[p]] for p in pivots), order)


def state_of_initial(piece: GradedPiece, order: TermOrder) -> tuple:
    return initial_monomials(piece, order).point(piece.n_vars)


def state_polytope(piece: GradedPiece, budget: int | None = None, jobs: int = 1) -> Polytope:
    return hull_vertices(states(piece, budget, jobs).points)


# -- Bayer-Morrison cross-check --------------------------------------------------

def integer_weight(c: Sequence[Fraction]) -> tuple[int, ...]:
    """Clear denominators; the direction is unchanged."""
    den = lcm(*(Fraction(x).denominator for x in c)) if c else 1
    return tuple(int(Fraction(x) * den) for x in c)


@dataclass
class BayerMorrisonReport:
    passed: bool
    vertices: int
    samples: int
    not_vertex: list = field(default_factory=list)
    unrecovered: list = field(default_factory=list)
    tie_samples: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"passed": self.passed, "vertices": self.vertices, "samples": self.samples,
                "not_vertex": [list(map(str, s)) for s in self.not_vertex],
                "unrecovered": [list(map(str, v)) for v in self.unrecovered],
                "tie_samples": [list(s) for s in self.tie_samples]}


def bayer_morrison_check(piece: GradedPiece, weight_samples: Sequence[Sequence[int]],
                         budget: int | None = None) -> BayerMorrisonReport:
    """Initial states under weight orders versus vertices of the state polytope.

    (a) each sampled weight order selects a state that is a vertex;
    (b) each vertex is selected by an integer weight from the interior of its
        normal cone (the weight order picks the state of largest weight).
    """
    st = states(piece, budget)
    poly = hull_vertices(st.points)
    report = BayerMorrisonReport(True, len(poly), len(weight_samples))
    for w in weight_samples:
        chi = state_of_initial(piece, TermOrder.weighted(w))
        if chi not in poly.vertices:
            report.not_vertex.append((tuple(w), chi))
        vals = [sum(a * b for a, b in zip(p, w)) for p in st.points]
        if vals.count(max(vals)) > 1:
            report.tie_samples.append(tuple(w))
    for v in sorted(poly.vertices):
        c = normal_cone_weight(v, poly.vertices)
        if c is None:
            report.unrecovered.append(v)
            continue
        got = state_of_initial(piece, TermOrder.weighted(integer_weight(c)))
        if got != v:
            report.unrecovered.append(v)
    report.passed = not report.not_vertex and not report.unrecovered
    return report
