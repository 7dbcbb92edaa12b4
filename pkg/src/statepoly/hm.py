"""Hilbert-Mumford indices of (dual) Hilbert points for diagonal 1-PS.

A weight vector that does not sum to zero is replaced by its traceless shift
r_i - w (w the average weight) before any index is taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import TermOrder, weight_of
from .chain import ChainInstance, assemble
from .ideal import GradedPiece
from .states import dual_states, initial_monomials, states


class IndexDisagreement(AssertionError):
    """Two independent index computations gave different values."""


@dataclass(frozen=True)
class OneParamSubgroup:
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(r) for r in self.weights))

    @property
    def average(self) -> Fraction:
        return Fraction(sum(self.weights), len(self.weights))

    @property
    def normalized(self) -> tuple[Fraction, ...]:
        w = self.average
        return tuple(r - w for r in self.weights)

    def restrict(self, a: int, b: int) -> "OneParamSubgroup":
        return OneParamSubgroup(self.weights[a:b + 1])

    def shifted(self, c: int) -> "OneParamSubgroup":
        return OneParamSubgroup(tuple(r + c for r in self.weights))

    def __len__(self):
        return len(self.weights)


def pairing(chi: Sequence, rho: OneParamSubgroup, normalized: bool = False) -> Fraction:
    if len(chi) != len(rho):
        raise ValueError(f"character has length {len(chi)}, 1-PS has {len(rho)}")
    r = rho.normalized if normalized else rho.weights
    return sum((Fraction(c) * x for c, x in zip(chi, r)), Fraction(0))


def _check_len(piece: GradedPiece, rho: OneParamSubgroup):
    if len(rho) != piece.n_vars:
        raise ValueError(f"1-PS has {len(rho)} weights, ring has {piece.n_vars} variables")


def mu(piece: GradedPiece, rho: OneParamSubgroup, budget=None) -> Fraction:
    """max{-<chi, rho'>} over the states, cross-checked against the initial ideal.

    The second route sorts monomials so that the least rho-weight leads (the
    limit t -> 0 of rho(t) keeps the lowest-weight terms) and sums weights of
    the pivot monomials.
    """
    _check_len(piece, rho)
    by_states = max(-pairing(chi, rho, normalized=True) for chi in states(piece, budget).points)
    order = TermOrder.weighted([-r for r in rho.weights])
    rn = rho.normalized
    by_initial = -sum((Fraction(weight_of(a, rn)) for a in initial_monomials(piece, order).monomials),
                      Fraction(0))
    if by_states != by_initial:
        raise IndexDisagreement(f"state maximum {by_states} != initial-ideal sum {by_initial}")
    return by_states


def mu_dual(piece: GradedPiece, rho: OneParamSubgroup, budget=None, check: bool = True) -> Fraction:
    """Index of the dual Hilbert point: max over monomial bases B of S_m/I_m of
    the sum of rho'-weights over B (the dual basis vectors carry opposite weights)."""
    _check_len(piece, rho)
    value = max(pairing(psi, rho, normalized=True) for psi in dual_states(piece, budget))
    if check:
        primal = mu(piece, rho, budget)
        if value != primal:
            raise IndexDisagreement(f"dual index {value} != index {primal}")
    return value


# -- decomposition of the index over a chain -----------------------------------------

def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class MuDecompositionReport:
    weights: tuple[int, ...]
    lhs: Fraction
    block_mu: list[Fraction]
    stated_rhs: Fraction
    stated_ok: bool
    two_block_steps: list[dict]
    two_block_ok: bool
    derived_rhs: Fraction
    derived_ok: bool

    @property
    def passed(self) -> bool:
        return self.stated_ok and self.two_block_ok

    def to_json(self) -> dict:
        return {"weights": list(self.weights), "lhs": _fmt(self.lhs),
                "block_mu": [_fmt(x) for x in self.block_mu],
                "stated_formula": {"rhs": _fmt(self.stated_rhs), "equal": self.stated_ok,
                                   "discrepancy": _fmt(self.lhs - self.stated_rhs)},
                "two_block_form": {"equal": self.two_block_ok, "steps": self.two_block_steps},
                "derived_formula": {"rhs": _fmt(self.derived_rhs), "equal": self.derived_ok,
                                    "discrepancy": _fmt(self.lhs - self.derived_rhs)},
                "passed": self.passed}


def stated_rhs(block_mu: Sequence, rho: OneParamSubgroup, boundaries: Sequence[int],
               m: int, P: int, block_P: Sequence[int]) -> Fraction:
    """sum mu_i - sum_i w_i m P_i + w m P + m sum_{shared k} r_k, taken literally."""
    n = boundaries[-1]
    r = rho.weights
    total = sum(block_mu, Fraction(0))
    for i in range(len(block_P)):
        a, b = boundaries[i], boundaries[i + 1]
        total -= Fraction(m * block_P[i], b - a + 1) * sum(r[a:b + 1])
    total += Fraction(m * P, n + 1) * sum(r)
    total += m * sum(r[k] for k in boundaries[1:-1])
    return total


def derived_rhs(block_mu: Sequence, rho: OneParamSubgroup, boundaries: Sequence[int],
                m: int, P: int, block_P: Sequence[int]) -> Fraction:
    """sum mu_i + sum_i w_i m P_i - w m P - m sum_{shared k} r_k.

    Obtained by splitting each state as block states plus tau and evaluating
    <tau, rho> from the partition of S_m into block monomials and cross terms.
    """
    r = rho.weights
    total = sum(block_mu, Fraction(0))
    for i in range(len(block_P)):
        a, b = boundaries[i], boundaries[i + 1]
        total += Fraction(sum(r[a:b + 1]), b - a + 1) * m * block_P[i]
    total -= rho.average * m * P
    total -= m * sum(r[k] for k in boundaries[1:-1])
    return total


def _two_block_rhs(mu1, mu2, rho1, rho2, rho, m, P1, P2, P, shared_weight) -> Fraction:
    # mu1 + mu2 + w1 m P1 + w2 m P2 + wt(x_k^m) - w m P, taken literally
    return (mu1 + mu2 + rho1.average * m * P1 + rho2.average * m * P2
            + m * shared_weight - rho.average * m * P)


def mu_decomposition_check(inst: ChainInstance, rho: OneParamSubgroup, budget=None) -> MuDecompositionReport:
    cfg, m = inst.config, inst.m
    if len(rho) != cfg.n_vars:
        raise ValueError(f"1-PS has {len(rho)} weights, chain has {cfg.n_vars} variables")
    b = cfg.boundaries
    lhs = mu_dual(inst.full, rho, budget)
    block_rhos = [rho.restrict(b[i], b[i + 1]) for i in range(cfg.ell)]
    block_mu = [mu_dual(p, r, budget) for p, r in zip(inst.blocks, block_rhos)]
    s_rhs = stated_rhs(block_mu, rho, b, m, inst.P, inst.Ps)
    d_rhs = derived_rhs(block_mu, rho, b, m, inst.P, inst.Ps)

    # two-block form, applied by induction: blocks 1..k against block k+1
    steps = []
    prev_piece, prev_mu = inst.blocks[0], block_mu[0]
    for k in range(1, cfg.ell):
        rho_prev = rho.restrict(0, b[k])
        rho_next = block_rhos[k]
        rho_joint = rho.restrict(0, b[k + 1])
        joint = inst.full if k + 1 == cfg.ell else assemble(cfg.prefix(k + 1), m).full
        joint_mu = lhs if k + 1 == cfg.ell else mu_dual(joint, rho_joint, budget)
        rhs = _two_block_rhs(prev_mu, block_mu[k], rho_prev, rho_next, rho_joint, m,
                             prev_piece.P, inst.blocks[k].P, joint.P, rho.weights[b[k]])
        steps.append({"blocks": f"1..{k} | {k + 1}", "lhs": _fmt(joint_mu), "rhs": _fmt(rhs),
                      "equal": joint_mu == rhs})
        prev_piece, prev_mu = joint, joint_mu
    return MuDecompositionReport(rho.weights, lhs, block_mu, s_rhs, lhs == s_rhs, steps,
                                 all(s["equal"] for s in steps), d_rhs, lhs == d_rhs)
