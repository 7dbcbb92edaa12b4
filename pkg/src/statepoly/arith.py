"""Monomials and homogeneous polynomials over the rationals, with term orders."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Monomial:
    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")

    @property
    def n_vars(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if other.n_vars != self.n_vars:
            raise ValueError("ambient size mismatch")
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) or "1"

    def __repr__(self):
        return f"Monomial({str(self)})"


def variable(i: int, n_vars: int) -> Monomial:
    return Monomial(tuple(int(j == i) for j in range(n_vars)))


@lru_cache(maxsize=None)
def monomials_of_degree(n_vars: int, m: int) -> tuple[Monomial, ...]:
    """All degree-m monomials in n_vars variables, descending lexicographic.

    This is the canonical column order of every graded piece.
    """
    if n_vars < 1:
        raise ValueError("need at least one variable")
    if m < 0:
        raise ValueError("negative degree")
    out = []
    for combo in combinations_with_replacement(range(n_vars), m):
        exps = [0] * n_vars
        for i in combo:
            exps[i] += 1
        out.append(Monomial(tuple(exps)))
    return tuple(out)


def weight_of(a: Monomial, weights: Sequence) -> int:
    if len(weights) != a.n_vars:
        raise ValueError(f"weight vector has length {len(weights)}, expected {a.n_vars}")
    return sum(e * r for e, r in zip(a.exps, weights))


class Polynomial:
    """Sparse polynomial: Monomial -> Fraction, zero coefficients dropped."""

    __slots__ = ("n_vars", "terms")

    def __init__(self, terms: dict, n_vars: int):
        self.n_vars = n_vars
        clean = {}
        for mono, c in terms.items():
            if mono.n_vars != n_vars:
                raise ValueError("monomial does not match ambient size")
            c = Fraction(c)
            if c:
                clean[mono] = c
        self.terms = clean

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.n_vars == other.n_vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n_vars, frozenset(self.terms.items())))

    @property
    def degrees(self) -> set[int]:
        return {mono.degree for mono in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.degrees)

    def scale(self, c) -> "Polynomial":
        return Polynomial({mono: c * v for mono, v in self.terms.items()}, self.n_vars)

    def shift(self, mono: Monomial) -> "Polynomial":
        return Polynomial({mono * t: v for t, v in self.terms.items()}, self.n_vars)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self.terms)
        for mono, v in other.terms.items():
            terms[mono] = terms.get(mono, 0) + v
        return Polynomial(terms, self.n_vars)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=lambda t: t.exps, reverse=True):
            c = self.terms[mono]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            body = str(mono)
            if body == "1":
                body = str(c)
            elif c != 1:
                body = f"{c}*{body}"
            pieces.append((sign, body))
        s = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Polynomial({str(self)!r}, n_vars={self.n_vars})"


_FACTOR = re.compile(r"^(?:(\d+)(?:/(\d+))?|x(\d+)(?:\^(\d+))?)$")


def parse_polynomial(text: str, n_vars: int) -> Polynomial:
    """Parse text like ``3/2*x0^2*x1 - x2^3`` in variables x0..x{n_vars-1}."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty polynomial")
    # split into signed terms; a sign right after '^' or '/' never occurs in valid input
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ParseError(f"cannot parse {text!r}")
    out: dict[Monomial, Fraction] = {}
    for term in terms:
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        if not term:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        exps = [0] * n_vars
        for factor in term.split("*"):
            match = _FACTOR.match(factor)
            if not match:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            num, den, var, power = match.groups()
            if num is not None:
                if den is not None and int(den) == 0:
                    raise ParseError(f"zero denominator in {text!r}")
                coeff *= Fraction(int(num), int(den) if den else 1)
            else:
                i = int(var)
                if i >= n_vars:
                    raise ParseError(f"variable x{i} outside x0..x{n_vars - 1}")
                exps[i] += int(power) if power else 1
        mono = Monomial(tuple(exps))
        out[mono] = out.get(mono, 0) + coeff
    return Polynomial(out, n_vars)


class TermOrder:
    """Total order on monomials of a fixed degree.

    kind is "lex", "grevlex" or "weighted". Weighted orders compare the
    weight first and break ties by grevlex; larger weight is greater.
    """

    KINDS = ("lex", "grevlex", "weighted")

    def __init__(self, kind: str, weights: Iterable[int] | None = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown term order {kind!r}")
        if (kind == "weighted") != (weights is not None):
            raise ValueError("weights are required exactly for weighted orders")
        self.kind = kind
        self.weights = tuple(int(r) for r in weights) if weights is not None else None

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def weighted(cls, weights):
        return cls("weighted", weights)

    def key(self, a: Monomial):
        """Sort key; a larger key is a greater monomial."""
        if self.kind == "lex":
            return a.exps
        grev = (a.degree, tuple(-e for e in reversed(a.exps)))
        if self.kind == "grevlex":
            return grev
        return (weight_of(a, self.weights), grev)

    def compare(self, a: Monomial, b: Monomial) -> int:
        if a.n_vars != b.n_vars:
            raise ValueError("ambient size mismatch")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and (self.kind, self.weights) == (other.kind, other.weights)

    def __hash__(self):
        return hash((self.kind, self.weights))

    def __repr__(self):
        if self.weights is None:
            return f"TermOrder.{self.kind}()"
        return f"TermOrder.weighted({list(self.weights)})"


def compare(order: TermOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as a is less than, equal to or greater than b."""
    return order.compare(a, b)
