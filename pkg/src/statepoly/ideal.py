"""Degree-m pieces of homogeneous ideals as canonical RREF matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb, factorial
from typing import Iterable, NamedTuple, Sequence

from .arith import Monomial, ParseError, Polynomial, monomials_of_degree, parse_polynomial
from .linalg import nullspace, rank, rref


@dataclass(frozen=True)
class IdealPresentation:
    generators: tuple[Polynomial, ...]
    n_vars: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.n_vars != self.n_vars:
                raise ValueError("generator ambient size mismatch")
            if not g:
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")

    @classmethod
    def parse(cls, generators: Iterable[str], n_vars: int) -> "IdealPresentation":
        return cls(tuple(parse_polynomial(g, n_vars) for g in generators), n_vars)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)


def read_ideal(text: str) -> IdealPresentation:
    """Parse the ideal file format: a ``vars: k`` header, then one generator per line."""
    n_vars = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n_vars is None:
            key, sep, value = line.partition(":")
            if not sep or key.strip() != "vars":
                raise ParseError(f"line {lineno}: expected 'vars: <count>' header")
            try:
                n_vars = int(value)
            except ValueError:
                raise ParseError(f"line {lineno}: bad variable count {value.strip()!r}") from None
            if n_vars < 1:
                raise ParseError(f"line {lineno}: need at least one variable")
            continue
        gens.append(parse_polynomial(line, n_vars))
    if n_vars is None:
        raise ParseError("missing 'vars: <count>' header")
    try:
        return IdealPresentation(tuple(gens), n_vars)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class GradedPiece:
    """A subspace of S_m stored as its RREF over the canonical monomial columns.

    Two presentations of the same subspace give equal objects.
    """

    n_vars: int
    degree: int
    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, n_vars: int, degree: int, rows: Sequence[Sequence]) -> "GradedPiece":
        ncols = len(monomials_of_degree(n_vars, degree))
        red, _ = rref(rows, ncols)
        return cls(n_vars, degree, red)

    @classmethod
    def zero(cls, n_vars: int, degree: int) -> "GradedPiece":
        return cls(n_vars, degree, ())

    @property
    def columns(self) -> tuple[Monomial, ...]:
        return monomials_of_degree(self.n_vars, self.degree)

    @cached_property
    def index(self) -> dict[Monomial, int]:
        return {mono: j for j, mono in enumerate(self.columns)}

    @property
    def N(self) -> int:
        return len(self.columns)

    @property
    def Q(self) -> int:
        return len(self.rows)

    @property
    def P(self) -> int:
        return self.N - self.Q

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.rows)

    def is_monomial(self) -> bool:
        return all(sum(1 for x in row if x) == 1 for row in self.rows)

    def support(self) -> tuple[Monomial, ...]:
        """Monomials spanning a monomial piece."""
        if not self.is_monomial():
            raise ValueError("piece is not spanned by monomials")
        return tuple(self.columns[p] for p in self.pivots)

    def contains(self, other: "GradedPiece") -> bool:
        _check_same(self, other)
        return rank(self.rows + other.rows, self.N) == self.Q

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial(dict(zip(self.columns, row)), self.n_vars) for row in self.rows]

    def __repr__(self):
        return f"GradedPiece(n_vars={self.n_vars}, m={self.degree}, Q={self.Q}, P={self.P})"


def _check_same(a: GradedPiece, b: GradedPiece):
    if a.n_vars != b.n_vars or a.degree != b.degree:
        raise ValueError(
            f"pieces differ: ({a.n_vars} vars, m={a.degree}) vs ({b.n_vars} vars, m={b.degree})")


def graded_piece(ideal: IdealPresentation, m: int) -> GradedPiece:
    """Span of all shifts x^b*g of degree m."""
    if m < 0:
        raise ValueError("negative degree")
    cols = monomials_of_degree(ideal.n_vars, m)
    index = {mono: j for j, mono in enumerate(cols)}
    rows = []
    for g in ideal.generators:
        d = g.degree
        if d > m:
            continue
        for shift in monomials_of_degree(ideal.n_vars, m - d):
            row = [Fraction(0)] * len(cols)
            for mono, c in g.terms.items():
                row[index[mono * shift]] = c
            rows.append(row)
    return GradedPiece.from_rows(ideal.n_vars, m, rows)


def intersect(a: GradedPiece, b: GradedPiece) -> GradedPiece:
    _check_same(a, b)
    # A cap B = (A^perp + B^perp)^perp
    dual = nullspace(a.rows, a.N) + nullspace(b.rows, b.N)
    return GradedPiece.from_rows(a.n_vars, a.degree, nullspace(dual, a.N))


def piece_sum(pieces: Sequence[GradedPiece]) -> GradedPiece:
    first = pieces[0]
    for p in pieces[1:]:
        _check_same(first, p)
    return GradedPiece.from_rows(first.n_vars, first.degree, [r for p in pieces for r in p.rows])


@dataclass(frozen=True)
class BlockEmbedding:
    """Variables x_a..x_b of the ambient ring (inclusive)."""

    a: int
    b: int

    def __post_init__(self):
        if not 0 <= self.a <= self.b:
            raise ValueError(f"bad block range [{self.a}, {self.b}]")

    @property
    def width(self) -> int:
        return self.b - self.a + 1

    def lift(self, mono: Monomial, n_vars: int) -> Monomial:
        exps = [0] * n_vars
        exps[self.a:self.b + 1] = mono.exps
        return Monomial(tuple(exps))

    def lift_point(self, point: Sequence, n_vars: int) -> tuple:
        out = [0] * n_vars
        out[self.a:self.b + 1] = point
        return tuple(out)

    def restrict_weights(self, weights: Sequence) -> tuple:
        return tuple(weights[self.a:self.b + 1])


def embed(piece: GradedPiece, emb: BlockEmbedding, n_vars: int) -> GradedPiece:
    """Rename block variable x_j to x_{a+j} in a ring of n_vars variables."""
    if piece.n_vars != emb.width:
        raise ValueError(f"piece has {piece.n_vars} variables, block has {emb.width}")
    if emb.b >= n_vars:
        raise ValueError(f"block [{emb.a}, {emb.b}] exceeds {n_vars} variables")
    cols = monomials_of_degree(n_vars, piece.degree)
    index = {mono: j for j, mono in enumerate(cols)}
    target = [index[emb.lift(mono, n_vars)] for mono in piece.columns]
    rows = []
    for row in piece.rows:
        new = [Fraction(0)] * len(cols)
        for j, x in zip(target, row):
            new[j] = x
        rows.append(new)
    # the lift preserves relative column order, so the result is still in RREF
    return GradedPiece(n_vars, piece.degree, tuple(tuple(r) for r in rows))


def monomial_span(monomials: Iterable[Monomial], n_vars: int, m: int) -> GradedPiece:
    cols = monomials_of_degree(n_vars, m)
    index = {mono: j for j, mono in enumerate(cols)}
    picked = sorted({index[mono] for mono in monomials})
    rows = []
    for j in picked:
        row = [Fraction(0)] * len(cols)
        row[j] = Fraction(1)
        rows.append(tuple(row))
    return GradedPiece(n_vars, m, tuple(rows))


def block_span(n_vars: int, m: int, a: int, b: int) -> GradedPiece:
    """S_m of the subring k[x_a..x_b], inside S_m."""
    emb = BlockEmbedding(a, b)
    return monomial_span((emb.lift(mono, n_vars) for mono in monomials_of_degree(emb.width, m)),
                         n_vars, m)


def restrict(piece: GradedPiece, a: int, b: int) -> GradedPiece:
    """piece intersected with the subring k[x_a..x_b]."""
    return intersect(piece, block_span(piece.n_vars, piece.degree, a, b))


def product_monomial_ideal(U: Iterable[int], V: Iterable[int], m: int, n_vars: int) -> GradedPiece:
    """Degree-m piece of <x_u : u in U> * <x_v : v in V>."""
    U, V = set(U), set(V)
    if not U or not V:
        raise ValueError("both variable sets must be nonempty")
    if U & V:
        raise ValueError(f"variable sets overlap: {sorted(U & V)}")
    if not all(0 <= i < n_vars for i in U | V):
        raise ValueError("variable index out of range")
    monos = [mono for mono in monomials_of_degree(n_vars, m)
             if any(mono.exps[u] for u in U) and any(mono.exps[v] for v in V)]
    return monomial_span(monos, n_vars, m)


def variable_ideal(variables: Iterable[int], m: int, n_vars: int) -> GradedPiece:
    """Degree-m piece of <x_j : j in variables>."""
    vs = set(variables)
    return monomial_span((mono for mono in monomials_of_degree(n_vars, m)
                          if any(mono.exps[j] for j in vs)), n_vars, m)


def tau_point(piece: GradedPiece) -> tuple[int, ...]:
    """Exponent sum over the monomials spanning a monomial piece."""
    total = [0] * piece.n_vars
    for mono in piece.support():
        for i, e in enumerate(mono.exps):
            total[i] += e
    return tuple(total)


class DirectSum(NamedTuple):
    ok: bool
    diagnostic: str


def direct_sum_check(whole: GradedPiece, parts: Sequence[GradedPiece]) -> DirectSum:
    for p in parts:
        _check_same(whole, p)
    dims = [p.Q for p in parts]
    if sum(dims) != whole.Q:
        return DirectSum(False, f"part dimensions {dims} sum to {sum(dims)}, whole has {whole.Q}")
    stacked = [r for p in parts for r in p.rows]
    r = rank(stacked, whole.N)
    if r != whole.Q:
        return DirectSum(False, f"parts have rank {r} < {whole.Q}: the sum is not direct")
    if rank(stacked + list(whole.rows), whole.N) != whole.Q:
        return DirectSum(False, "parts span a different subspace than the whole")
    return DirectSum(True, f"direct sum of dimensions {dims}")


# -- Gotzmann representation ---------------------------------------------------

def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _binomial_poly(shift: int, a: int) -> list:
    """Coefficients (ascending in u) of C(u + shift, a)."""
    p = [Fraction(1)]
    for j in range(1, a + 1):
        c0 = Fraction(shift - j + 1, j)
        c1 = Fraction(1, j)
        new = [Fraction(0)] * (len(p) + 1)
        for i, x in enumerate(p):
            new[i] += x * c0
            new[i + 1] += x * c1
        p = new
    return p


def gotzmann_representation(coeffs: Sequence) -> list[int]:
    """Exponents a_1 >= a_2 >= ... with P(u) = sum_i C(u + a_i - i + 1, a_i).

    coeffs are ascending in u. Raises ValueError when no such representation exists.
    """
    p = _poly_trim([Fraction(c) for c in coeffs])
    if not p:
        raise ValueError("the zero polynomial has no Gotzmann representation")
    out: list[int] = []
    while p:
        d = len(p) - 1
        count = p[d] * factorial(d)
        if count <= 0 or count.denominator != 1:
            raise ValueError(
                f"not a Hilbert polynomial: degree-{d} coefficient {p[d]} gives {count} leading terms")
        for _ in range(int(count)):
            term = _binomial_poly(d - len(out), d)
            p = p + [Fraction(0)] * (len(term) - len(p))
            for i, x in enumerate(term):
                p[i] -= x
            out.append(d)
        _poly_trim(p)
        if len(p) - 1 >= d:
            raise ValueError("representation does not terminate")
    return out


def gotzmann_number(coeffs: Sequence) -> int:
    return len(gotzmann_representation(coeffs))


def hilbert_function_value(coeffs: Sequence, u: int) -> Fraction:
    return sum((Fraction(c) * u ** i for i, c in enumerate(coeffs)), Fraction(0))


def dim_S(n_vars: int, m: int) -> int:
    return comb(m + n_vars - 1, m)
