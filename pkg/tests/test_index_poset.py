import itertools

import pytest

from polarorder.index_poset import (ChannelIndex, OnesSet, apply_addition,
                                    apply_left_swap, binary_expansion,
                                    dominates, index_from_bits, is_degraded,
                                    one_step_successors, rank,
                                    reachability_masks, to_ones_set,
                                    transitive_closure_oracle)


def idx(n, value):
    return ChannelIndex(n, value)


class TestChannelIndex:
    def test_validation(self):
        with pytest.raises(ValueError):
            ChannelIndex(0, 0)
        with pytest.raises(ValueError):
            ChannelIndex(31, 0)
        with pytest.raises(ValueError):
            ChannelIndex(4, 16)
        with pytest.raises(ValueError):
            ChannelIndex(4, -1)

    def test_binary_expansion(self):
        assert binary_expansion(idx(4, 10)) == (1, 0, 1, 0)
        assert binary_expansion(idx(4, 0)) == (0, 0, 0, 0)
        assert binary_expansion(idx(5, 12)) == (0, 1, 1, 0, 0)

    def test_expansion_round_trip(self):
        for n in (1, 3, 6):
            for v in range(1 << n):
                assert index_from_bits(binary_expansion(idx(n, v))) == idx(n, v)

    def test_bits_property(self):
        assert idx(4, 10).bits == (1, 0, 1, 0)


class TestOperators:
    def test_addition_examples(self):
        assert apply_addition(idx(4, 10), 2) == idx(4, 14)
        assert apply_addition(idx(4, 10), 3) == idx(4, 10)
        assert apply_addition(idx(4, 10), 4) == idx(4, 11)

    def test_addition_range(self):
        with pytest.raises(ValueError):
            apply_addition(idx(4, 10), 0)
        with pytest.raises(ValueError):
            apply_addition(idx(4, 10), 5)

    def test_left_swap_examples(self):
        assert apply_left_swap(idx(4, 10), 2) == idx(4, 10)
        assert apply_left_swap(idx(4, 10), 3) == idx(4, 12)
        assert apply_left_swap(idx(4, 10), 4) == idx(4, 10)

    def test_left_swap_range(self):
        with pytest.raises(ValueError):
            apply_left_swap(idx(4, 10), 1)
        with pytest.raises(ValueError):
            apply_left_swap(idx(4, 10), 5)

    def test_one_step_successors(self):
        assert {s.value for s in one_step_successors(idx(4, 10))} == {11, 12, 14}
        assert one_step_successors(idx(4, 15)) == set()
        assert {s.value for s in one_step_successors(idx(4, 0))} == {1, 2, 4, 8}

    def test_operators_upgrade(self):
        # every operator output dominates its input
        for n in range(1, 9):
            for v in range(1 << n):
                i = idx(n, v)
                for k in range(1, n + 1):
                    assert is_degraded(i, apply_addition(i, k))
                for k in range(2, n + 1):
                    assert is_degraded(i, apply_left_swap(i, k))


class TestOnesSet:
    def test_examples(self):
        assert to_ones_set(idx(4, 10)).positions == (2, 4)
        assert to_ones_set(idx(4, 0)).positions == ()
        assert to_ones_set(idx(4, 15)).positions == (1, 2, 3, 4)

    def test_bijective(self):
        seen = {to_ones_set(idx(5, v)).positions for v in range(32)}
        assert len(seen) == 32

    def test_validation(self):
        with pytest.raises(ValueError):
            OnesSet(4, (0,))
        with pytest.raises(ValueError):
            OnesSet(4, (5,))
        with pytest.raises(ValueError):
            OnesSet(4, (2, 2))
        with pytest.raises(ValueError):
            OnesSet(4, (3, 1))


class TestOrder:
    def test_known_n4_pairs(self):
        assert is_degraded(idx(4, 10), idx(4, 12))
        assert is_degraded(idx(4, 10), idx(4, 14))
        assert not is_degraded(idx(4, 8), idx(4, 7))
        assert not is_degraded(idx(4, 7), idx(4, 8))

    def test_reachable_across_sizes(self):
        # 0100 -> 0101 -> 1001 via one addition and one left-swap
        assert is_degraded(idx(4, 4), idx(4, 9))

    def test_reflexive(self):
        for v in range(16):
            assert is_degraded(idx(4, v), idx(4, v))

    def test_mismatched_n(self):
        with pytest.raises(ValueError):
            is_degraded(idx(4, 1), idx(5, 1))

    def test_antisymmetric(self):
        for n in range(1, 8):
            for u in range(1 << n):
                for v in range(u + 1, 1 << n):
                    assert not (dominates(n, u, v) and dominates(n, v, u))

    def test_transitive(self):
        for n in range(1, 7):
            size = 1 << n
            rel = [[dominates(n, u, v) for v in range(size)]
                   for u in range(size)]
            for a, b, c in itertools.product(range(size), repeat=3):
                if rel[a][b] and rel[b][c]:
                    assert rel[a][c]

    def test_bitwise_subset_implies_degraded(self):
        # additions alone give the subset order on bit masks
        for n in range(1, 9):
            for u in range(1 << n):
                for v in range(1 << n):
                    if u & ~v == 0:
                        assert dominates(n, u, v)

    def test_chain_example(self):
        chain = [2, 3, 5, 9]
        for a, b in zip(chain, chain[1:]):
            assert dominates(4, a, b)


class TestRank:
    def test_examples(self):
        assert rank(idx(4, 0)) == 0
        assert rank(idx(4, 15)) == 10
        assert rank(idx(4, 10)) == 6

    def test_extremes(self):
        for n in range(1, 9):
            assert rank(idx(n, 0)) == 0
            assert rank(idx(n, (1 << n) - 1)) == n * (n + 1) // 2

    def test_covers_increase_rank_by_one(self):
        # j covers i: i strictly below j with nothing in between
        for n in range(1, 7):
            size = 1 << n
            masks = reachability_masks(n)
            covers = 0
            for i in range(size):
                above = masks[i] & ~(1 << i)
                for j in range(size):
                    if not (above >> j) & 1:
                        continue
                    if any((above >> z) & 1 and z != j and (masks[z] >> j) & 1
                           for z in range(size)):
                        continue
                    covers += 1
                    assert rank(idx(n, j)) == rank(idx(n, i)) + 1
            assert covers >= size - 1


class TestClosureOracle:
    def test_n1(self):
        assert transitive_closure_oracle(1) == {(0, 0), (1, 1), (0, 1)}

    def test_n2_total_order(self):
        expected = {(u, v) for u in range(4) for v in range(4) if u <= v}
        assert transitive_closure_oracle(2) == expected

    def test_cap(self):
        with pytest.raises(ValueError):
            transitive_closure_oracle(13)

    def test_agrees_with_is_degraded(self):
        for n in range(1, 9):
            size = 1 << n
            closure = transitive_closure_oracle(n)
            for u in range(size):
                for v in range(size):
                    assert dominates(n, u, v) == ((u, v) in closure), (n, u, v)
