"""Chains of varieties on consecutive coordinate blocks, and the decomposition checks.

Block i lives on x_{n_{i-1}}..x_{n_i}; consecutive blocks share one variable.
The degree-m piece of the chain ideal splits as a direct sum of the block
pieces and monomial cross-term pieces, so its states are sums of block states
plus one fixed translation tau.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import reduce
from itertools import product as cartesian
from math import prod
from typing import Sequence

from .arith import Monomial, Polynomial, parse_polynomial, variable
from .ideal import (BlockEmbedding, DirectSum, GradedPiece, IdealPresentation,
                    direct_sum_check, embed, gotzmann_number, graded_piece, intersect,
                    monomial_span, product_monomial_ideal, restrict, tau_point, variable_ideal)
from .polytope import (BlockHyperplaneWitness, Polytope, hull_vertices, minkowski_sum,
                       vertex_sum_lemma_check)
from .states import states

log = logging.getLogger(__name__)

VARIANTS = ("proof", "statement")


class ChainConfigError(ValueError):
    pass


class ChainAssemblyError(RuntimeError):
    """The input does not satisfy the chain hypothesis."""


@dataclass(frozen=True)
class ChainConfig:
    n: int
    boundaries: tuple[int, ...]
    blocks: tuple[IdealPresentation, ...]
    hilbert: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        object.__setattr__(self, "blocks", tuple(self.blocks))
        b = self.boundaries
        if len(b) < 3:
            raise ChainConfigError("a chain needs at least two blocks")
        if b[0] != 0 or b[-1] != self.n:
            raise ChainConfigError(f"boundaries must run from 0 to n={self.n}, got {list(b)}")
        if any(x >= y for x, y in zip(b, b[1:])):
            raise ChainConfigError(f"boundaries must increase strictly, got {list(b)}")
        if len(self.blocks) != len(b) - 1:
            raise ChainConfigError(f"{len(b) - 1} blocks expected, got {len(self.blocks)}")
        for i, ideal in enumerate(self.blocks):
            width = b[i + 1] - b[i] + 1
            if ideal.n_vars != width:
                raise ChainConfigError(f"block {i + 1} has {ideal.n_vars} variables, expected {width}")

    @property
    def ell(self) -> int:
        return len(self.blocks)

    @property
    def n_vars(self) -> int:
        return self.n + 1

    def block(self, i: int) -> BlockEmbedding:
        """Embedding of block i (0-based)."""
        return BlockEmbedding(self.boundaries[i], self.boundaries[i + 1])

    def prefix(self, k: int) -> "ChainConfig":
        """The chain of the first k blocks, in the ring k[x_0..x_{n_k}]."""
        return ChainConfig(self.boundaries[k], self.boundaries[:k + 1], self.blocks[:k])

    @classmethod
    def from_json(cls, data: dict) -> "ChainConfig":
        try:
            n = int(data["n"])
            boundaries = tuple(int(x) for x in data["boundaries"])
            blocks = tuple(IdealPresentation(tuple(parse_polynomial(g, int(blk["vars"]))
                                                   for g in blk.get("generators", [])),
                                             int(blk["vars"]))
                           for blk in data["blocks"])
        except (KeyError, TypeError) as exc:
            raise ChainConfigError(f"malformed chain config: {exc!r}") from None
        except ValueError as exc:
            raise ChainConfigError(str(exc)) from None
        hilbert = data.get("hilbert")
        return cls(n, boundaries, blocks, tuple(hilbert) if hilbert is not None else None)

    @classmethod
    def loads(cls, text: str) -> "ChainConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ChainConfigError(f"invalid JSON: {exc}") from None
        return cls.from_json(data)


def full_ring_ideal(config: ChainConfig, i: int) -> IdealPresentation:
    """Block i's ideal in the full ring: its generators plus x_j for every j off the block."""
    emb = config.block(i)
    nv = config.n_vars
    gens = [Polynomial({emb.lift(mono, nv): c for mono, c in g.terms.items()}, nv)
            for g in config.blocks[i].generators]
    gens += [Polynomial({variable(j, nv): 1}, nv) for j in range(nv) if not emb.a <= j <= emb.b]
    return IdealPresentation(tuple(gens), nv)


def build_T_ideals(config: ChainConfig, m: int, variant: str = "proof",
                   grouping: str = "left") -> tuple[list[GradedPiece], tuple[int, ...]]:
    """Cross-term monomial pieces and their total tau.

    variant="proof" applies the two-block product ideal
    <x_0..x_{k-1}><x_{k+1}..x_r> at each induction step; grouping picks whether
    blocks are absorbed from the left ((1,2),3) or the right (1,(2,3)).
    variant="statement" builds T_1 = <x_{n_1+1}..x_n> and, for 2 <= i <= l-1,
    T_i = <x_{n_{i-2}}..x_{n_{i-1}-1}><x_{n_i+1}..x_n>, each cut down to
    k[x_{n_{i-1}}..x_n].
    """
    b, nv, ell = config.boundaries, config.n_vars, config.ell
    pieces = []
    if variant == "proof":
        for i in range(1, ell):
            k = b[i]
            if grouping == "left":
                lo, hi = 0, b[i + 1]
            elif grouping == "right":
                lo, hi = b[i - 1], config.n
            else:
                raise ValueError(f"unknown grouping {grouping!r}")
            T = product_monomial_ideal(range(lo, k), range(k + 1, hi + 1), m, nv)
            pieces.append(restrict(T, lo, hi) if (lo, hi) != (0, config.n) else T)
    elif variant == "statement":
        for i in range(1, ell):
            if i == 1:
                T = variable_ideal(range(b[1] + 1, config.n + 1), m, nv)
            else:
                T = product_monomial_ideal(range(b[i - 2], b[i - 1]), range(b[i] + 1, config.n + 1),
                                           m, nv)
            pieces.append(restrict(T, b[i - 1], config.n))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    tau = [0] * nv
    for p in pieces:
        for j, x in enumerate(tau_point(p)):
            tau[j] += x
    return pieces, tuple(tau)


@dataclass
class ChainInstance:
    config: ChainConfig
    m: int
    variant: str
    full: GradedPiece
    blocks: tuple[GradedPiece, ...]
    embedded: tuple[GradedPiece, ...]
    cross: tuple[GradedPiece, ...]
    t_pieces: tuple[GradedPiece, ...]
    tau: tuple[int, ...]
    direct_sum: DirectSum
    warnings: list[str] = field(default_factory=list)

    @property
    def Q(self) -> int:
        return self.full.Q

    @property
    def P(self) -> int:
        return self.full.P

    @property
    def Qs(self) -> list[int]:
        return [p.Q for p in self.blocks]

    @property
    def Ps(self) -> list[int]:
        return [p.P for p in self.blocks]

    def summary(self) -> dict:
        return {"m": self.m, "variant": self.variant, "Q": self.Q, "P": self.P,
                "block_Q": self.Qs, "block_P": self.Ps, "tau": list(self.tau),
                "T_dims": [t.Q for t in self.t_pieces], "direct_sum": self.direct_sum.diagnostic,
                "warnings": list(self.warnings)}


def assemble(config: ChainConfig, m: int, variant: str = "proof") -> ChainInstance:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if m < 1:
        raise ChainConfigError("degree m must be positive")
    nv = config.n_vars
    warnings = []
    top = max(ideal.max_degree for ideal in config.blocks)
    if m < top:
        warnings.append(f"m={m} is below the largest generator degree {top}")
    if config.hilbert is not None:
        g = gotzmann_number(config.hilbert)
        if m < g:
            warnings.append(f"m={m} is below the Gotzmann number {g} of the given Hilbert polynomial")
    warnings.append("saturation of the block ideals is assumed, not verified")

    full = reduce(intersect, (graded_piece(full_ring_ideal(config, i), m) for i in range(config.ell)))
    blocks = tuple(graded_piece(ideal, m) for ideal in config.blocks)
    embedded = tuple(embed(p, config.block(i), nv) for i, p in enumerate(blocks))

    for i in range(1, config.ell):
        k = config.boundaries[i]
        power = monomial_span([Monomial(tuple(m if j == k else 0 for j in range(nv)))], nv, m)
        if full.contains(power):
            raise ChainAssemblyError(
                f"x{k}^{m} lies in the chain ideal: blocks {i} and {i + 1} do not meet at the "
                f"coordinate point of x{k}")
    for i, emb in enumerate(embedded):
        blk = config.block(i)
        if restrict(full, blk.a, blk.b) != emb:
            raise ChainAssemblyError(
                f"the chain ideal cut to k[x{blk.a}..x{blk.b}] differs from block {i + 1}'s ideal")

    cross, _ = build_T_ideals(config, m, "proof")
    ds = direct_sum_check(full, list(embedded) + list(cross))
    if not ds.ok:
        raise ChainAssemblyError(f"block and cross-term pieces do not split the chain ideal: {ds.diagnostic}")
    t_pieces, tau = build_T_ideals(config, m, variant)
    for w in warnings:
        log.info(w)
    return ChainInstance(config, m, variant, full, blocks, embedded, tuple(cross),
                         tuple(t_pieces), tau, ds, warnings)


# -- verification ----------------------------------------------------------------

@dataclass
class CheckReport:
    check: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.check, "passed": self.passed, "details": self.details}


def _pts(points, limit: int = 10) -> list:
    return [list(p) for p in sorted(points)[:limit]]


def block_state_sets(inst: ChainInstance, budget=None) -> list[set]:
    nv = inst.config.n_vars
    out = []
    for i, piece in enumerate(inst.blocks):
        emb = inst.config.block(i)
        out.append({emb.lift_point(p, nv) for p in states(piece, budget).points})
    return out


def _sumset(sets: Sequence, start: Sequence) -> set:
    out = set()
    for combo in cartesian(*[sorted(s) for s in sets]):
        out.add(tuple(sum(xs) for xs in zip(start, *combo)))
    return out


def verify_state_decomposition(inst: ChainInstance, budget=None, jobs: int = 1) -> CheckReport:
    lhs = states(inst.full, budget, jobs).points
    rhs = _sumset(block_state_sets(inst, budget), inst.tau)
    m = inst.m
    rhs_level = m * (sum(inst.Qs) + sum(t.Q for t in inst.t_pieces))
    lhs_level_ok = all(sum(p) == m * inst.Q for p in lhs)
    details = {"lhs_states": len(lhs), "rhs_states": len(rhs),
               "coordinate_sum_lhs": m * inst.Q, "coordinate_sum_rhs": rhs_level,
               "lhs_on_hyperplane": lhs_level_ok}
    passed = lhs == rhs
    if not passed:
        details["only_lhs"] = _pts(lhs - rhs)
        details["only_rhs"] = _pts(rhs - lhs)
    return CheckReport("states", passed and lhs_level_ok, details)


def block_polytopes(inst: ChainInstance, budget=None) -> list[Polytope]:
    return [hull_vertices(s) for s in block_state_sets(inst, budget)]


def verify_polytope_decomposition(inst: ChainInstance, budget=None, jobs: int = 1) -> CheckReport:
    lhs = hull_vertices(states(inst.full, budget, jobs).points)
    rhs = reduce(minkowski_sum, block_polytopes(inst, budget)).translate(inst.tau)
    passed = lhs.vertices == rhs.vertices
    details = {"lhs": lhs.to_json(), "rhs": rhs.to_json()}
    return CheckReport("polytope", passed, details)


def verify_vertex_sharpness(inst: ChainInstance, budget=None, jobs: int = 1) -> CheckReport:
    lhs = hull_vertices(states(inst.full, budget, jobs).points)
    polys = block_polytopes(inst, budget)
    counts = [len(p) for p in polys]
    sums = {}
    for combo in cartesian(*[p.sorted_vertices() for p in polys]):
        key = tuple(sum(xs) for xs in zip(inst.tau, *combo))
        sums.setdefault(key, []).append(combo)
    injective = all(len(v) == 1 for v in sums.values())
    equal = lhs.vertices == set(sums)

    lemma = []
    acc = polys[0]
    m = inst.m
    level = m * inst.Qs[0]
    for i in range(1, inst.config.ell):
        # block states have coordinate sum m*Q_i
        w = BlockHyperplaneWitness(inst.config.boundaries[i], level, m * inst.Qs[i])
        rep = vertex_sum_lemma_check(acc, polys[i], w)
        lemma.append(rep.to_json())
        acc = minkowski_sum(acc, polys[i])
        level += m * inst.Qs[i]
    lemma_ok = all(r["passed"] for r in lemma)
    details = {"lhs_vertices": len(lhs), "block_vertex_counts": counts,
               "product": prod(counts), "sum_map_injective": injective,
               "vertex_sets_equal": equal, "lemma_steps": lemma}
    passed = equal and injective and len(lhs) == prod(counts) and lemma_ok
    return CheckReport("vertices", passed, details)
