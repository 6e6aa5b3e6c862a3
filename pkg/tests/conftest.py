"""
Shared fixtures and generators for the smansec test suite.
"""

import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from smansec.gf.field import FieldPrime
from smansec.gf.matrix import FieldMatrix
from smansec.codegen.code import EncodingMatrix
from smansec.sman.network import Sman
from smansec.util.rng import make_generator

FIG1_ROWS = [
    [1, 1, 1, 0, 0, 0],
    [1, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 1],
]

FIG1_TEXT = "sman 4 6\n" + "".join(" ".join(map(str, row)) + "\n" for row in FIG1_ROWS)

SMALL_PRIMES = (5, 7, 11, 13)


@pytest.fixture
def fig1() -> Sman:
    """The (6,4)-SMAN whose relays are the six 2-subsets of the sources."""
    return Sman.from_rows(FIG1_ROWS)


@pytest.fixture
def all_ones_4x6() -> Sman:
    return Sman.all_ones(4, 6)


@pytest.fixture
def gf5() -> FieldPrime:
    return FieldPrime(5)


@pytest.fixture
def gf7() -> FieldPrime:
    return FieldPrime(7)


@pytest.fixture
def gf13() -> FieldPrime:
    return FieldPrime(13)


@pytest.fixture
def secure_code_gf5(gf5) -> EncodingMatrix:
    """G = [[1,1,1],[1,2,3]] over GF(5): MDS and weakly secure."""
    return EncodingMatrix.from_rows(gf5, [[1, 1, 1], [1, 2, 3]])


@st.composite
def smans(draw, min_k=2, max_k=4, max_n=7):
    """Random SMANs with min_k <= k <= max_k and k <= n <= max_n."""
    k = draw(st.integers(min_value=min_k, max_value=max_k))
    n = draw(st.integers(min_value=k, max_value=max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k))
    return Sman(k=k, n=n, rows=tuple(rows))


@st.composite
def field_matrices(draw, primes=SMALL_PRIMES, min_rows=1, max_rows=5, min_cols=1, max_cols=5):
    field = FieldPrime(draw(st.sampled_from(primes)))
    rows = draw(st.integers(min_rows, max_rows))
    cols = draw(st.integers(min_cols, max_cols))
    entries = draw(st.lists(st.integers(0, field.p - 1), min_size=rows * cols, max_size=rows * cols))
    return FieldMatrix(field, np.array(entries, dtype=np.int64).reshape(rows, cols))


def random_smans(count, seed=0, k_range=(2, 4), max_n=7, density=0.5):
    """``count`` seeded random SMANs; the same seed always gives the same list."""
    rng = make_generator(seed)
    result = []
    for _ in range(count):
        k = int(rng.integers(k_range[0], k_range[1] + 1))
        n = int(rng.integers(k, max_n + 1))
        bits = rng.random((k, n)) < density
        result.append(Sman.from_rows(bits.astype(int).tolist()))
    return result


def all_smans(k, n):
    """Every k x n SMAN."""
    for rows in itertools.product(range(1 << n), repeat=k):
        yield Sman(k=k, n=n, rows=rows)
