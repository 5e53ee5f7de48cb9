import random

import pytest
from hypothesis import strategies as st

from nonassoc import GF, QQ, Algebra
from nonassoc import fixtures as fx
from nonassoc.algebra import change_basis, symmetrize
from nonassoc.linalg import Matrix, rank


def random_table(rng: random.Random, F, n: int, density: float = 0.5):
    products = {}
    for i in range(n):
        for j in range(n):
            if rng.random() < density:
                products[(i, j)] = [F(rng.randrange(F.p)) if rng.random() < 0.6 else F.zero
                                    for _ in range(n)]
    return Algebra(F, [f"e{k}" for k in range(n)], products)


def random_invertible(rng: random.Random, F, n: int) -> Matrix:
    while True:
        m = Matrix(F, [[F(rng.randrange(F.p)) for _ in range(n)] for _ in range(n)])
        if rank(m) == n:
            return m


def rebased(A: Algebra, rng: random.Random) -> Algebra:
    m = random_invertible(rng, A.field, A.dim)
    return change_basis(A, [A.element(c) for c in m.columns()])


def upper_triangular(F):
    # associative: 2x2 upper triangular matrices on e11, e12, e22
    return Algebra(F, ["e11", "e12", "e22"], {
        (0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (1, 2): [0, 1, 0], (2, 2): [0, 0, 1]})


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    n, m = A.dim, B.dim
    F = A.field
    products = {}
    for i in range(n):
        for j in range(n):
            products[(i, j)] = list(A.table[i][j]) + [F.zero] * m
    for i in range(m):
        for j in range(m):
            products[(n + i, n + j)] = [F.zero] * n + list(B.table[i][j])
    names = [f"{s}1" for s in A.basis_names] + [f"{s}2" for s in B.basis_names]
    return Algebra(F, names, products)


def structured_gf5(rng: random.Random) -> Algebra:
    """Random member of a family of power-associative GF(5) algebras, basis-changed."""
    F = GF(5)
    one = Algebra(F, ["e"], {(0, 0): [1]})
    choices = [
        lambda: fx.exflex1(F, 2).algebra,
        lambda: fx.exflex1(F, 4).algebra,
        lambda: fx.exflex2(F, 2).algebra,
        lambda: fx.exflex2(F, 4).algebra,
        lambda: fx.matrix_algebra(F, 2).algebra,
        lambda: upper_triangular(F),
        lambda: direct_sum(one, one),
        lambda: direct_sum(one, fx.exflex1(F, 2).algebra),
        lambda: direct_sum(one, upper_triangular(F)),
        lambda: symmetrize(fx.matrix_algebra(F, 2).algebra),
    ]
    return rebased(rng.choice(choices)(), rng)


def gf5_corpus(count: int, seed: int = 20261016) -> list[Algebra]:
    """Mixed corpus: plain random, random commutative, structured and rebased."""
    rng = random.Random(seed)
    F = GF(5)
    out = []
    for k in range(count):
        n = rng.randint(1, 4) if k % 3 else rng.randint(1, 3)
        kind = k % 4
        if kind == 0:
            out.append(random_table(rng, F, n))
        elif kind == 1:
            out.append(symmetrize(random_table(rng, F, n)))
        elif kind == 2:
            out.append(structured_gf5(rng))
        else:
            out.append(random_table(rng, F, n, density=0.25))
    return out


@st.composite
def gf_algebras(draw, p: int = 5, max_dim: int = 3, commutative: bool = False):
    F = GF(p)
    n = draw(st.integers(1, max_dim))
    coeffs = st.integers(0, p - 1)
    table = draw(st.lists(st.lists(coeffs, min_size=n, max_size=n),
                          min_size=n * n, max_size=n * n))
    products = {(i, j): table[i * n + j] for i in range(n) for j in range(n)}
    A = Algebra(F, [f"e{k}" for k in range(n)], products)
    return symmetrize(A) if commutative else A


@st.composite
def elements(draw, A: Algebra):
    F = A.field
    if F.is_finite:
        vals = st.integers(0, F.p - 1)
    else:
        vals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return A.element([F(v) for v in draw(st.lists(vals, min_size=A.dim, max_size=A.dim))])


@pytest.fixture
def exflex1_q():
    return fx.exflex1(QQ, 2)


@pytest.fixture
def exflex2_q():
    return fx.exflex2(QQ, 2)
