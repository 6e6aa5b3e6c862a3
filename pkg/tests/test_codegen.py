"""
Tests for encoding matrices: verifiers, constructions, coding and the code file format.
"""

import itertools

import pytest
from hypothesis import given, settings

from smansec.errors import (
    AmbiguousDecodeError,
    InfeasibleError,
    ParseError,
    RetryExhaustedError,
    UsageError,
)
from smansec.codegen import (
    Codeword,
    EncodingMatrix,
    Message,
    NearestCodewordDecoder,
    cauchy_code,
    cauchy_points,
    code_from_json,
    code_to_json,
    construct_code,
    correctable_errors,
    decode_nearest,
    encode,
    load_code,
    min_distance,
    parse_code,
    serialize_code,
    support_of,
    transposed_submatrices,
    vandermonde_code,
    verify_mds_code,
    verify_weak_security_code,
    verify_weak_security_minors,
)
from smansec.gf import FieldMatrix, FieldPrime, rank
from smansec.sman import Sman, check_weak_security_condition
from smansec.trim import trim
from smansec.types import WitnessKind
from smansec.util import make_generator

from .conftest import field_matrices


@pytest.fixture(scope="module")
def trimmed_4x6() -> Sman:
    return trim(Sman.all_ones(4, 6)).sman


class TestEncodingMatrix:

    def test_support_must_follow_the_sman(self, gf5):
        matrix = FieldMatrix.from_rows(gf5, [[1, 1, 1], [1, 2, 3]])
        with pytest.raises(UsageError):
            EncodingMatrix(matrix=matrix, sman=Sman.from_rows([[1, 1, 0], [1, 1, 1]]))

    def test_rank_must_be_k(self, gf5):
        with pytest.raises(UsageError):
            EncodingMatrix.from_rows(gf5, [[1, 2, 3], [2, 4, 1]])

    def test_support_of(self, secure_code_gf5):
        assert secure_code_gf5.sman == Sman.all_ones(2, 3)
        sparse = FieldMatrix.from_rows(FieldPrime(5), [[1, 0, 2], [0, 3, 4]])
        assert support_of(sparse).to_rows() == [[1, 0, 1], [0, 1, 1]]


class TestVerifiers:

    def test_mds_examples(self, gf5, secure_code_gf5):
        assert verify_mds_code(EncodingMatrix.from_rows(gf5, [[1, 1, 1], [0, 1, 2]]))
        assert verify_mds_code(secure_code_gf5)
        assert not verify_mds_code(EncodingMatrix.from_rows(gf5, [[1, 2, 0], [2, 4, 1]]))

    def test_weak_security_examples(self, gf5, secure_code_gf5):
        assert verify_weak_security_code(secure_code_gf5)
        assert not verify_weak_security_code(EncodingMatrix.from_rows(gf5, [[1, 1, 3], [0, 2, 1]]))
        assert not verify_weak_security_code(EncodingMatrix.from_rows(gf5, [[1, 0, 1], [0, 1, 1]]))

    def test_single_source_is_vacuously_secure(self, gf5):
        assert verify_weak_security_code(EncodingMatrix.from_rows(gf5, [[1, 0, 2]]))

    def test_transposed_submatrices(self, secure_code_gf5):
        pairs = list(transposed_submatrices(secure_code_gf5))
        assert [E for E, _ in pairs] == [(0,), (1,), (2,)]
        assert pairs[2][1].to_rows() == [[1, 3]]

    def test_minors_examples(self, gf5, secure_code_gf5):
        assert verify_weak_security_minors(secure_code_gf5)
        assert not verify_weak_security_minors(EncodingMatrix.from_rows(gf5, [[1, 0, 1], [0, 1, 1]]))

    @settings(max_examples=300, deadline=None)
    @given(field_matrices(primes=(5, 7), min_rows=2, max_rows=4, max_cols=6))
    def test_minors_imply_row_space_criterion(self, m):
        if m.cols < m.rows:
            return
        if verify_weak_security_minors(m):
            assert verify_weak_security_code(m)
        if verify_mds_code(m):
            assert verify_weak_security_minors(m) == verify_weak_security_code(m)

    @settings(max_examples=300, deadline=None)
    @given(field_matrices(primes=(5, 7), min_rows=2, max_rows=3, max_cols=5))
    def test_secure_mds_code_implies_topology_condition(self, m):
        if m.cols < m.rows or rank(m) < m.rows:
            return
        if verify_mds_code(m) and verify_weak_security_code(m):
            assert check_weak_security_condition(support_of(m)).holds

    def test_zero_column_is_secure_without_constraining_the_topology(self, gf5):
        g = EncodingMatrix.from_rows(gf5, [[1, 1, 0], [1, 2, 0]])
        assert verify_weak_security_code(g)
        assert not verify_mds_code(g)
        assert not check_weak_security_condition(g.sman).holds


class TestConstruction:

    def test_small_dense(self, gf5):
        s = Sman.all_ones(2, 3)
        result = construct_code(s, gf5, seed=1)
        assert verify_mds_code(result.code)
        assert verify_weak_security_code(result.code)
        assert result.code.sman == s
        assert 1 <= result.attempts <= 64

    def test_trimmed_dense_over_large_prime(self, trimmed_4x6):
        result = construct_code(trimmed_4x6)
        g = result.code
        assert result.attempts <= 64
        assert g.field.p == 65537
        assert verify_mds_code(g)
        assert verify_weak_security_code(g)
        assert support_of(g.matrix) == trimmed_4x6

    def test_deterministic(self, trimmed_4x6):
        assert construct_code(trimmed_4x6, seed=42) == construct_code(trimmed_4x6, seed=42)

    def test_seed_changes_result(self, trimmed_4x6):
        assert construct_code(trimmed_4x6, seed=1).code != construct_code(trimmed_4x6, seed=2).code

    def test_fig1_is_infeasible(self, fig1):
        with pytest.raises(InfeasibleError) as info:
            construct_code(fig1)
        assert info.value.verdict.display_witness() == [4, 5, 6]
        assert info.value.verdict.witness_kind == WitnessKind.RELAY_SET

    def test_retry_exhausted(self):
        with pytest.raises(RetryExhaustedError) as info:
            construct_code(Sman.all_ones(3, 4), FieldPrime(2), max_attempts=3)
        assert info.value.attempts == 3
        assert "larger prime" in str(info.value)

    def test_attempts_must_be_positive(self):
        with pytest.raises(UsageError):
            construct_code(Sman.all_ones(2, 3), max_attempts=0)

    def test_small_field_distance(self, gf13):
        s = trim(Sman.all_ones(3, 4)).sman
        g = construct_code(s, gf13, seed=3).code
        assert min_distance(g) == g.n - g.k + 1

    def test_trimmed_dense_over_small_prime(self, trimmed_4x6, gf13):
        result = construct_code(trimmed_4x6, gf13, seed=12)
        g = result.code
        assert result.attempts <= 64
        assert support_of(g.matrix) == trimmed_4x6
        assert verify_weak_security_code(g)
        assert min_distance(g) == 3
        assert correctable_errors(g) == 1


class TestCauchy:

    def test_two_by_two(self, gf7):
        assert cauchy_code(2, 2, gf7).matrix.to_rows() == [[4, 5], [5, 2]]

    def test_points_avoid_zero_denominators(self):
        xs, ys = cauchy_points(3, 4, 7)
        assert xs == [0, 1, 2]
        assert ys == [3, 4, 1, 2]
        assert all((x + y) % 7 for x in xs for y in ys)

    def test_field_too_small(self, gf7):
        with pytest.raises(UsageError):
            cauchy_code(3, 5, gf7)

    @pytest.mark.parametrize("k, n, p", [(2, 3, 5), (3, 4, 7), (3, 4, 11), (3, 5, 11), (4, 6, 13), (2, 5, 7)])
    def test_secure_and_mds(self, k, n, p):
        g = cauchy_code(k, n, FieldPrime(p))
        assert g.sman == Sman.all_ones(k, n)
        assert verify_mds_code(g)
        assert verify_weak_security_code(g)
        assert verify_weak_security_minors(g)

    def test_vandermonde_is_mds_but_not_secure(self, gf7):
        g = vandermonde_code(3, 5, gf7)
        assert verify_mds_code(g)
        assert not verify_weak_security_code(g)

    def test_vandermonde_field_too_small(self, gf5):
        with pytest.raises(UsageError):
            vandermonde_code(2, 6, gf5)


class TestEncodeDecode:

    def test_encode_examples(self, gf5, secure_code_gf5):
        assert encode(secure_code_gf5, Message.of(gf5, [1, 1])).values == (2, 3, 4)
        assert encode(secure_code_gf5, Message.of(gf5, [0, 0])).values == (0, 0, 0)
        systematic = EncodingMatrix.from_rows(gf5, [[1, 0, 1], [0, 1, 1]])
        assert encode(systematic, Message.of(gf5, [3, 4])).values[:2] == (3, 4)

    def test_encode_mismatch(self, gf5, gf7, secure_code_gf5):
        with pytest.raises(UsageError):
            encode(secure_code_gf5, Message.of(gf7, [1, 1]))
        with pytest.raises(UsageError):
            encode(secure_code_gf5, Message.of(gf5, [1, 1, 1]))

    def test_decode_exact_word(self, gf5, secure_code_gf5):
        x = Message.of(gf5, [3, 2])
        result = decode_nearest(secure_code_gf5, encode(secure_code_gf5, x))
        assert result.message == x
        assert result.errors == 0

    def test_tie_is_ambiguous(self):
        gf3 = FieldPrime(3)
        g = EncodingMatrix.from_rows(gf3, [[1, 1]])
        with pytest.raises(AmbiguousDecodeError) as info:
            decode_nearest(g, Codeword.of(gf3, [0, 1]))
        assert len(info.value.candidates) == 2
        assert info.value.distance == 1

    def test_decode_length_mismatch(self, gf5, secure_code_gf5):
        with pytest.raises(UsageError):
            decode_nearest(secure_code_gf5, Codeword.of(gf5, [1, 2]))

    def test_min_distance_examples(self, gf5):
        assert min_distance(EncodingMatrix.from_rows(gf5, [[1, 0], [0, 1]])) == 1
        assert min_distance(EncodingMatrix.from_rows(gf5, [[1, 1, 1]])) == 3

    def test_budget(self, gf13):
        with pytest.raises(UsageError):
            min_distance(cauchy_code(4, 6, gf13), budget=1000)

    def test_single_errors_are_corrected(self, gf13):
        g = cauchy_code(4, 6, gf13)
        decoder = NearestCodewordDecoder(g)
        assert decoder.min_distance() == 3
        assert correctable_errors(g) == 1
        rng = make_generator(17)
        for _ in range(50):
            x = Message(tuple(int(v) for v in rng.integers(0, 13, size=4)), gf13)
            y = encode(g, x).values
            for position, offset in itertools.product(range(6), range(1, 13)):
                corrupted = list(y)
                corrupted[position] = (corrupted[position] + offset) % 13
                result = decoder.decode(Codeword(tuple(corrupted), gf13))
                assert result.message == x
                assert result.errors == 1


class TestCodeFormat:

    def test_round_trip(self, secure_code_gf5):
        text = serialize_code(secure_code_gf5)
        assert text == "code 2 3 5\n1 1 1\n1 2 3\n"
        assert parse_code(text) == secure_code_gf5
        assert load_code(text) == secure_code_gf5
        assert code_from_json(code_to_json(secure_code_gf5)) == secure_code_gf5
        assert load_code(code_to_json(secure_code_gf5)) == secure_code_gf5

    @pytest.mark.parametrize("text, line", [
        ("", 1),
        ("code 2 3\n1 1 1\n1 2 3\n", 1),
        ("code 2 3 5\n1 1 1\n1 2\n", 3),
        ("code 2 3 5\n1 1 1\n1 2 7\n", 3),
        ("code 2 3 5\n1 1 1\n", 3),
        ("code 2 3 4\n1 1 1\n1 2 3\n", 1),
        ("code 2 3 5\n1 1 1\n2 2 2\n", 1),
        ("code 1 2 5\n1 1\n1 1\n", 3),
    ])
    def test_parse_errors(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_code(text)
        assert info.value.line == line

    @pytest.mark.parametrize("text", [
        '{"k": 1, "n": 2, "p": 5, "rows": [[1, 5]]}',
        '{"k": 2, "n": 2, "p": 5, "rows": [[1, 1]]}',
        '{"k": 1, "n": 2, "p": 5}',
        '{"k": 1, "n": 2, "p": 5, "rows": [1, 1]}',
        '{"k": 1, "n": 2, "p": "5", "rows": [[1, 1]]}',
        '{"k": "1", "n": 2, "p": 5, "rows": [[1, 1]]}',
        '{"k": 1, "n": 2, "p": 5, "rows": [[true, 1]]}',
    ])
    def test_json_errors(self, text):
        with pytest.raises(ParseError):
            code_from_json(text)
