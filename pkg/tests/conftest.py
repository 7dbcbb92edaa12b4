from pathlib import Path

import pytest

from statepoly.chain import ChainConfig

DATA = Path(__file__).parent / "data"

# (fixture file, degree m); labels follow the acceptance fixtures (a)-(d)
CHAIN_FIXTURES = [
    ("a", "points3", 2), ("a", "points3", 3),
    ("b", "mixed_p2", 2), ("b", "mixed_p2", 3), ("b", "conic_line_p3", 2),
    ("c", "conic_conic", 2), ("c", "conic_conic", 3), ("c", "conic_conic_generic", 3),
    ("d", "l3_p3", 2), ("d", "l3_p3", 3), ("d", "l3b_p3", 2),
]


def load_chain(name: str) -> ChainConfig:
    return ChainConfig.loads((DATA / f"{name}.json").read_text())


def generators_as_dicts(ideal):
    return [{mono.exps: c for mono, c in g.terms.items()} for g in ideal.generators]


@pytest.fixture
def data_dir() -> Path:
    return DATA


def random_sparse_ideal(rng, n_vars: int, m: int, max_gens: int = 3, low_degree: int = 1):
    """Up to max_gens homogeneous generators with 1-3 terms and small coefficients,
    of degrees between low_degree and m."""
    from statepoly.arith import Monomial, Polynomial, monomials_of_degree
    from statepoly.ideal import IdealPresentation

    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(min(low_degree, m), m)
        pool = monomials_of_degree(n_vars, d)
        picks = rng.sample(pool, min(len(pool), rng.randint(1, 3)))
        terms = {mono: rng.choice([-3, -2, -1, 1, 2, 3]) for mono in picks}
        gens.append(Polynomial(terms, n_vars))
    return IdealPresentation(tuple(gens), n_vars)


def random_conforming_pair(rng, max_dim: int = 5, max_vertices: int = 6):
    """Two polytopes in the block-hyperplane position, each the hull of at most
    max_vertices random lattice points."""
    from statepoly.polytope import BlockHyperplaneWitness, hull_vertices

    d = rng.randint(2, max_dim)
    k = rng.randint(0, d - 1)
    N1, N2 = rng.randint(1, 6), rng.randint(1, 6)

    def block_point(lo, hi, total):
        cuts = sorted(rng.randint(0, total) for _ in range(hi - lo))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        p = [0] * d
        p[lo:hi + 1] = parts
        return tuple(p)

    P1 = hull_vertices(block_point(0, k, N1) for _ in range(rng.randint(1, max_vertices)))
    P2 = hull_vertices(block_point(k, d - 1, N2) for _ in range(rng.randint(1, max_vertices)))
    return P1, P2, BlockHyperplaneWitness(k, N1, N2)


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, passed: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
