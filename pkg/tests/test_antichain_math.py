import math

import numpy as np
import pytest

from polarorder.antichain_math import (asymptotic_estimate, complexity_bounds,
                                       level_profile, max_antichain_size,
                                       signed_sum_zero_count)

# frozen from the brute-force enumeration oracle below
M_TABLE = {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 5, 7: 8, 8: 14, 9: 23, 10: 40,
            11: 70, 12: 124, 13: 221, 14: 397, 15: 722, 16: 1314, 17: 2410,
            18: 4441, 19: 8220, 20: 15272}


def enumerate_subset_sums(n):
    """Materialize the sums of all 2**n subsets of {1..n}."""
    sums = np.zeros(1, dtype=np.int64)
    for i in range(1, n + 1):
        sums = np.concatenate([sums, sums + i])
    return sums


class TestLevelProfile:
    def test_small_profiles(self):
        assert level_profile(1).counts == (1, 1)
        assert level_profile(3).counts == (1, 1, 1, 2, 1, 1, 1)
        assert level_profile(4).counts == (1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1)

    def test_total_and_ends(self):
        for n in range(1, 16):
            profile = level_profile(n)
            assert sum(profile.counts) == 2 ** n
            assert profile.counts[0] == 1
            assert profile.counts[-1] == 1
            assert len(profile.counts) == profile.top_rank + 1

    def test_symmetry_and_unimodality(self):
        for n in range(1, 16):
            counts = level_profile(n).counts
            assert counts == counts[::-1]
            peak = counts.index(max(counts))
            assert all(counts[r] <= counts[r + 1] for r in range(peak))
            assert all(counts[r] >= counts[r + 1]
                       for r in range(peak, len(counts) - 1))

    def test_matches_enumeration(self):
        for n in range(1, 13):
            bucketed = np.bincount(enumerate_subset_sums(n))
            assert tuple(int(c) for c in bucketed) == level_profile(n).counts

    def test_range_errors(self):
        with pytest.raises(ValueError):
            level_profile(0)
        with pytest.raises(ValueError):
            level_profile(65)


class TestMaxAntichainSize:
    def test_frozen_table(self):
        for n, m in M_TABLE.items():
            assert max_antichain_size(n) == m

    def test_middle_rank_is_max(self):
        for n in range(1, 21):
            counts = level_profile(n).counts
            mid = (n * (n + 1) // 2) // 2
            assert max(counts) == counts[mid]

    def test_monotone(self):
        values = [max_antichain_size(n) for n in range(1, 31)]
        assert all(b >= a for a, b in zip(values, values[1:]))


class TestSignedSums:
    def test_examples(self):
        assert signed_sum_zero_count(1) == 0
        assert signed_sum_zero_count(2) == 0
        assert signed_sum_zero_count(3) == 2
        assert signed_sum_zero_count(4) == 2

    def test_odd_total_gives_zero(self):
        for n in range(1, 20):
            if n % 4 in (1, 2):
                assert signed_sum_zero_count(n) == 0

    def test_matches_antichain_size(self):
        for n in (3, 4, 7, 8, 11, 12, 15, 16):
            assert signed_sum_zero_count(n) == max_antichain_size(n)

    def test_brute_force(self):
        for n in range(1, 13):
            sums = enumerate_subset_sums(n)
            total = n * (n + 1) // 2
            # positive-sign subset of sum total/2 <-> zero signed sum
            brute = int(np.sum(sums * 2 == total))
            assert signed_sum_zero_count(n) == brute


class TestAsymptotics:
    def test_values(self):
        assert asymptotic_estimate(10) == pytest.approx(44.76, abs=0.01)
        assert asymptotic_estimate(4) == pytest.approx(2.764, abs=0.001)

    def test_ratio_at_n10(self):
        ratio = max_antichain_size(10) / asymptotic_estimate(10)
        assert ratio == pytest.approx(0.894, abs=0.001)


class TestComplexityBounds:
    def test_n4(self):
        b = complexity_bounds(4)
        assert (b.m, b.lower) == (2, 2)
        assert b.upper_real == 8.0
        assert b.upper_budget == 8

    def test_n10(self):
        b = complexity_bounds(10)
        assert b.lower == 40
        assert b.upper_real == pytest.approx(227.12, abs=0.01)
        assert b.upper_budget == 228

    def test_n1(self):
        b = complexity_bounds(1)
        assert (b.lower, b.upper_real, b.upper_budget) == (1, 2.0, 2)

    def test_sandwich(self):
        for n in range(1, 33):
            b = complexity_bounds(n)
            assert b.lower <= b.upper_budget <= 2 ** n

    def test_budget_at_least_prejensen(self):
        # ceil(M log2(2N/M)) dominates the per-chain floor-log sum for
        # any partition into M chains covering 2^n indices
        for n in range(1, 15):
            b = complexity_bounds(n)
            even = [2 ** n // b.m] * b.m
            for i in range(2 ** n - sum(even)):
                even[i] += 1
            assert sum(int(math.log2(size)) + 1 for size in even) \
                <= b.upper_budget
