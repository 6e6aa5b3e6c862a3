"""
Tests for prime-field arithmetic and exact linear algebra.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from smansec.errors import FieldDomainError, UsageError
from smansec.gf import (
    FieldMatrix,
    FieldPrime,
    determinant,
    enumerate_vectors,
    mod_matmul,
    nullspace_basis,
    rank,
    row_space_contains,
)

from .conftest import SMALL_PRIMES, field_matrices


class TestFieldElement:

    def test_addition_wraps(self, gf5):
        assert (gf5(3) + gf5(4)).value == 2

    def test_inverse(self, gf5):
        assert gf5(2).inv().value == 3

    def test_fermat(self, gf7):
        assert (gf7(3) ** 6).value == 1

    def test_negative_power_goes_through_inverse(self, gf7):
        assert (gf7(3) ** -1) * gf7(3) == gf7.one

    def test_division(self, gf7):
        assert (gf7(6) / gf7(3)).value == 2

    def test_integers_mix_in(self, gf5):
        assert (2 * gf5(4) + 1).value == 4
        assert (1 - gf5(3)).value == 3

    def test_zero_has_no_inverse(self, gf5):
        with pytest.raises(FieldDomainError):
            gf5.zero.inv()
        with pytest.raises(FieldDomainError):
            gf5(1) / 0

    def test_field_mismatch(self, gf5, gf7):
        with pytest.raises(UsageError):
            gf5(1) + gf7(1)

    @pytest.mark.parametrize("p", [0, 1, 4, 9, 65536, 1 << 31])
    def test_rejects_non_prime_or_out_of_range(self, p):
        with pytest.raises(UsageError):
            FieldPrime(p)

    def test_rejects_bool(self):
        with pytest.raises(UsageError):
            FieldPrime(True)

    def test_accepts_largest_supported_prime(self):
        assert FieldPrime(2147483647).p == 2147483647

    @given(st.sampled_from(SMALL_PRIMES + (2, 3, 65537)), st.data())
    def test_inverse_property(self, p, data):
        field = FieldPrime(p)
        a = field(data.draw(st.integers(1, p - 1)))
        assert a * a.inv() == field.one


class TestFieldMatrix:

    def test_entries_are_reduced_and_frozen(self, gf5):
        m = FieldMatrix.from_rows(gf5, [[7, -1], [5, 3]])
        assert m.to_rows() == [[2, 4], [0, 3]]
        with pytest.raises(ValueError):
            m.array[0, 0] = 1

    def test_ragged_rows(self, gf5):
        with pytest.raises(UsageError):
            FieldMatrix.from_rows(gf5, [[1, 2], [3]])

    def test_select_and_transpose(self, gf5):
        m = FieldMatrix.from_rows(gf5, [[1, 2, 3], [4, 0, 1]])
        assert m.select_columns([2, 0]).to_rows() == [[3, 1], [1, 4]]
        assert m.select_rows([1]).to_rows() == [[4, 0, 1]]
        assert m.T.to_rows() == [[1, 4], [2, 0], [3, 1]]

    def test_select_out_of_range(self, gf5):
        m = FieldMatrix.identity(gf5, 2)
        with pytest.raises(UsageError):
            m.select_columns([2])

    def test_matmul(self, gf5):
        a = FieldMatrix.from_rows(gf5, [[1, 2], [3, 4]])
        b = FieldMatrix.from_rows(gf5, [[4, 0], [1, 1]])
        assert (a @ b).to_rows() == [[1, 2], [1, 4]]

    def test_matmul_shape_mismatch(self, gf5):
        with pytest.raises(UsageError):
            FieldMatrix.zeros(gf5, 2, 3) @ FieldMatrix.zeros(gf5, 2, 3)

    def test_equality_and_hash(self, gf5, gf7):
        a = FieldMatrix.from_rows(gf5, [[1, 2]])
        assert a == FieldMatrix.from_rows(gf5, [[6, 7]])
        assert hash(a) == hash(FieldMatrix.from_rows(gf5, [[6, 7]]))
        assert a != FieldMatrix.from_rows(gf7, [[1, 2]])

    def test_mod_matmul_does_not_overflow(self):
        p = 2147483647
        big = np.full((4, 4), p - 1, dtype=np.int64)
        assert np.all(mod_matmul(big, big, p) == 4 % p)


class TestLinearAlgebra:

    def test_rank_examples(self, gf5):
        assert rank(FieldMatrix.zeros(gf5, 3, 3)) == 0
        assert rank(FieldMatrix.identity(gf5, 4)) == 4
        assert rank(FieldMatrix.from_rows(gf5, [[1, 2], [2, 4]])) == 1

    def test_determinant_examples(self, gf5, gf7):
        assert determinant(FieldMatrix.identity(gf7, 3)).value == 1
        assert determinant(FieldMatrix.from_rows(gf5, [[1, 1], [1, 2]])).value == 1
        assert determinant(FieldMatrix.from_rows(gf7, [[1, 2, 3], [4, 5, 6], [1, 2, 3]])).value == 0

    def test_determinant_sign_of_row_swap(self, gf7):
        assert determinant(FieldMatrix.from_rows(gf7, [[0, 1], [1, 0]])).value == 6

    def test_determinant_requires_square(self, gf5):
        with pytest.raises(UsageError):
            determinant(FieldMatrix.zeros(gf5, 2, 3))

    def test_row_space_contains_examples(self, gf5):
        assert row_space_contains(FieldMatrix.identity(gf5, 2), [1, 1])
        assert not row_space_contains(FieldMatrix.from_rows(gf5, [[1, 1]]), [1, 0])
        assert row_space_contains(FieldMatrix.zeros(gf5, 2, 2), [0, 0])

    def test_row_space_contains_accepts_field_elements(self, gf5):
        m = FieldMatrix.from_rows(gf5, [[1, 1]])
        assert row_space_contains(m, [gf5(3), gf5(3)])

    def test_row_space_contains_length_mismatch(self, gf5):
        with pytest.raises(UsageError):
            row_space_contains(FieldMatrix.identity(gf5, 2), [1, 0, 0])

    def test_nullspace_examples(self, gf5):
        gf3 = FieldPrime(3)
        assert nullspace_basis(FieldMatrix.identity(gf5, 3)) == []
        assert nullspace_basis(FieldMatrix.from_rows(gf3, [[1, 1]])) == [(1, 2)]
        assert len(nullspace_basis(FieldMatrix.from_rows(gf5, [[1, 0, 2], [0, 1, 3]]))) == 1

    def test_enumerate_vectors(self, gf5):
        table = enumerate_vectors(FieldPrime(3), 2)
        assert table.tolist() == [[a, b] for a in range(3) for b in range(3)]
        assert enumerate_vectors(gf5, 0).shape == (1, 0)

    def test_enumerate_vectors_budget(self, gf5):
        with pytest.raises(UsageError):
            enumerate_vectors(gf5, 3, budget=100)

    @settings(max_examples=200, deadline=None)
    @given(field_matrices(max_rows=6, max_cols=6))
    def test_rank_of_transpose(self, m):
        assert rank(m) == rank(m.transpose())

    @settings(max_examples=200, deadline=None)
    @given(st.sampled_from((5, 13)), st.integers(1, 6), st.data())
    def test_determinant_nonzero_iff_full_rank(self, p, size, data):
        field = FieldPrime(p)
        entries = data.draw(st.lists(st.integers(0, p - 1), min_size=size * size, max_size=size * size))
        m = FieldMatrix(field, np.array(entries).reshape(size, size))
        assert bool(determinant(m)) == (rank(m) == size)

    @settings(max_examples=200, deadline=None)
    @given(field_matrices(max_rows=5, max_cols=6))
    def test_rank_nullity(self, m):
        basis = nullspace_basis(m)
        assert m.cols == rank(m) + len(basis)
        for vector in basis:
            column = FieldMatrix(m.field, np.array(vector).reshape(m.cols, 1))
            assert not np.any((m @ column).array)
            assert next(value for value in vector if value) == 1
