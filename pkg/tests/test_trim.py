"""
Tests for trimming a weakly securable SMAN down to n - k + 2 links per source.
"""

import pytest

from smansec.errors import InfeasibleError, UsageError
from smansec.flowverify import check_min_cut_condition
from smansec.sman import Sman, check_weak_security_condition
from smansec.trim import target_degree, trim, trim_step
from smansec.types import WitnessKind

from .conftest import random_smans


def securable_instances(count, seed):
    """The first ``count`` seeded random SMANs satisfying the condition."""
    found = []
    for s in random_smans(20 * count, seed=seed, max_n=6, density=0.85):
        if check_weak_security_condition(s).holds:
            found.append(s)
            if len(found) == count:
                break
    assert len(found) == count
    return found


class TestTrimStep:

    def test_removable_link(self, all_ones_4x6):
        step = trim_step(all_ones_4x6, 0, 0)
        assert step.verdict.holds
        assert step.sman.entry(0, 0) == 0
        assert all_ones_4x6.entry(0, 0) == 1

    def test_removal_at_target_fails(self):
        s = Sman.from_supports(6, [{0, 1, 2, 3}] + [set(range(6))] * 3)
        assert check_weak_security_condition(s).holds
        for relay in range(4):
            assert not trim_step(s, 0, relay).verdict.holds

    def test_absent_link(self):
        s = Sman.from_rows([[1, 0, 1], [1, 1, 1]])
        with pytest.raises(UsageError):
            trim_step(s, 0, 1)

    def test_round_trip(self, all_ones_4x6):
        assert trim_step(all_ones_4x6, 2, 3).sman.with_link(2, 3) == all_ones_4x6


class TestTrim:

    def test_dense(self, all_ones_4x6):
        result = trim(all_ones_4x6)
        assert result.sman.row_sizes() == (4, 4, 4, 4)
        assert check_weak_security_condition(result.sman).holds
        assert result.sman.is_subgraph_of(all_ones_4x6)
        assert len(result.removals) == 8

    def test_removal_log(self, all_ones_4x6):
        result = trim(all_ones_4x6)
        lines = result.removal_log().splitlines()
        assert len(lines) == 8
        assert lines[0] == "removed 1 1"
        assert all(line.startswith("removed ") for line in lines)

    def test_already_trimmed_is_unchanged(self, all_ones_4x6):
        trimmed = trim(all_ones_4x6).sman
        again = trim(trimmed)
        assert again.sman == trimmed
        assert again.removals == ()
        assert again.verifier_calls == 0

    def test_fig1_is_infeasible(self, fig1):
        with pytest.raises(InfeasibleError) as info:
            trim(fig1)
        verdict = info.value.verdict
        assert verdict.display_witness() == [1]
        assert verdict.witness_kind == WitnessKind.SOURCE_SET

    def test_single_source_is_returned_as_is(self):
        s = Sman.all_ones(1, 3)
        assert trim(s).sman == s

    def test_audit_mode(self):
        s = Sman.all_ones(3, 5)
        assert trim(s, audit=True) == trim(s)

    def test_brute_force_verifier_gives_same_result(self):
        s = Sman.all_ones(3, 5)
        assert trim(s, verifier=check_weak_security_condition).sman == trim(s).sman

    def test_random_instances(self):
        for s in securable_instances(100, seed=5):
            result = trim(s)
            out = result.sman
            target = target_degree(s)
            assert all(size == target for size in out.row_sizes())
            assert check_weak_security_condition(out).holds
            assert out.is_subgraph_of(s)
            assert len(result.removals) == sum(size - target for size in s.row_sizes())
            if result.backtracks == 0:
                assert result.verifier_calls <= (s.n * s.k) ** 2
            for i, j in out.links():
                assert not check_weak_security_condition(out.without_link(i, j)).holds

    def test_greedy_dead_end_backtracks(self):
        s = Sman.from_rows([[0, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1], [1, 0, 0, 1]])
        assert check_weak_security_condition(s).holds
        result = trim(s)
        assert result.backtracks == 2
        assert result.removals == ((0, 1), (1, 0), (1, 3), (2, 2), (2, 3))
        assert result.sman.to_rows() == [[0, 0, 1, 1], [0, 1, 1, 0], [1, 1, 0, 0], [1, 0, 0, 1]]
        assert check_weak_security_condition(result.sman).holds

    def test_square_instances_always_trim(self):
        found = 0
        for s in random_smans(400, seed=17, k_range=(4, 4), max_n=4, density=0.8):
            if not check_weak_security_condition(s).holds:
                continue
            found += 1
            for verifier in (check_min_cut_condition, check_weak_security_condition):
                result = trim(s, verifier=verifier)
                assert result.sman.row_sizes() == (2, 2, 2, 2)
                assert check_weak_security_condition(result.sman).holds
                assert result.sman.is_subgraph_of(s)
        assert found > 0

    def test_deterministic(self):
        for s in securable_instances(10, seed=9):
            assert trim(s) == trim(s)
