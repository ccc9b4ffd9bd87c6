"""Synthetic-channel indices, the upgrade operators, and the order they induce.

Bit conventions used throughout the package:

* ``bits`` are MSB-first, so ``value == sum(bits[k] * 2**(n-1-k))`` with
  0-based ``k``; operator positions count the same way, 1-based from the
  most significant bit.
* one-positions count from the *right*, 1-based: the least significant
  bit is position 1, the most significant is position n.

Index ``j`` dominates ``i`` (channel ``i`` is degraded w.r.t. ``j``)
exactly when ``j`` is reachable from ``i`` by repeatedly setting a bit
to 1 or moving a 1 one place toward the MSB across a 0.  Reachability is
decided in O(n) by aligning the one-position lists from their largest
elements; ``transitive_closure_oracle`` is the independent breadth-first
answer used to validate that shortcut exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

N_MAX = 30
ORACLE_N_MAX = 12


@dataclass(frozen=True)
class ChannelIndex:
    """An index into the 2**n synthetic channels of an n-level transform."""

    n: int
    value: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise ValueError(f"n must be in [1, {N_MAX}], got {self.n}")
        if not 0 <= self.value < 1 << self.n:
            raise ValueError(
                f"value must be in [0, 2^{self.n}), got {self.value}")

    @property
    def bits(self) -> tuple[int, ...]:
        return binary_expansion(self)


@dataclass(frozen=True)
class OnesSet:
    """Right-to-left positions (1-based) of the 1 bits of an index."""

    n: int
    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise ValueError(f"n must be in [1, {N_MAX}], got {self.n}")
        for p in self.positions:
            if not 1 <= p <= self.n:
                raise ValueError(f"position {p} outside [1, {self.n}]")
        if any(a >= b for a, b in zip(self.positions, self.positions[1:])):
            raise ValueError("positions must be strictly increasing")


def binary_expansion(i: ChannelIndex) -> tuple[int, ...]:
    """MSB-first bits of ``i``."""
    return tuple((i.value >> k) & 1 for k in range(i.n - 1, -1, -1))


def index_from_bits(bits: Sequence[int]) -> ChannelIndex:
    """Inverse of :func:`binary_expansion`."""
    value = 0
    for b in bits:
        value = (value << 1) | (b & 1)
    return ChannelIndex(len(bits), value)


def apply_addition(i: ChannelIndex, k: int) -> ChannelIndex:
    """Force bit ``k`` (1-based, MSB-first) of the expansion to 1."""
    if not 1 <= k <= i.n:
        raise ValueError(f"k must be in [1, {i.n}], got {k}")
    return ChannelIndex(i.n, i.value | (1 << (i.n - k)))


def apply_left_swap(i: ChannelIndex, k: int) -> ChannelIndex:
    """Swap a 1 at bit ``k`` with a 0 directly to its left, if possible."""
    if not 2 <= k <= i.n:
        raise ValueError(f"k must be in [2, {i.n}], got {k}")
    low = 1 << (i.n - k)
    high = low << 1
    if i.value & low and not i.value & high:
        return ChannelIndex(i.n, i.value ^ (low | high))
    return i


def _int_successors(n: int, value: int) -> list[int]:
    # machine bit positions here; equivalent to the 1-based operators above
    out = []
    for k in range(n):
        s = value | (1 << k)
        if s != value:
            out.append(s)
    for k in range(n - 1):
        low = 1 << k
        high = low << 1
        if value & low and not value & high:
            out.append(value ^ (low | high))
    return out


def one_step_successors(i: ChannelIndex) -> set[ChannelIndex]:
    """Every strictly upgraded index one operator application away."""
    return {ChannelIndex(i.n, s) for s in _int_successors(i.n, i.value)}


@lru_cache(maxsize=None)
def _ones_positions(n: int, value: int) -> tuple[int, ...]:
    return tuple(p for p in range(1, n + 1) if (value >> (p - 1)) & 1)


def to_ones_set(i: ChannelIndex) -> OnesSet:
    """The 1-bit positions of ``i``, counted from the right, ascending."""
    return OnesSet(i.n, _ones_positions(i.n, i.value))


def rank(i: ChannelIndex) -> int:
    """Sum of the one-positions; grades the order from 0 to n(n+1)/2."""
    return sum(_ones_positions(i.n, i.value))


def dominates(n: int, u: int, v: int) -> bool:
    """True iff index ``v`` is reachable from ``u`` by upgrade steps.

    Aligns the one-position lists from their largest elements: every 1 of
    ``u`` must be matched by a 1 of ``v`` at least as far left.  Reflexive.
    """
    x = _ones_positions(n, u)
    y = _ones_positions(n, v)
    off = len(y) - len(x)
    if off < 0:
        return False
    for j in range(len(x) - 1, -1, -1):
        if x[j] > y[off + j]:
            return False
    return True


def is_degraded(i: ChannelIndex, j: ChannelIndex) -> bool:
    """True iff channel ``i`` is (weakly) degraded with respect to ``j``."""
    if i.n != j.n:
        raise ValueError(f"mismatched index sizes: n={i.n} vs n={j.n}")
    return dominates(i.n, i.value, j.value)


def reachability_masks(n: int) -> list[int]:
    """Bitmask per index of everything reachable from it (itself included).

    Both operators strictly increase the integer value, so a single
    descending sweep closes the relation.
    """
    if not 1 <= n <= ORACLE_N_MAX:
        raise ValueError(
            f"closure oracle is capped at n={ORACLE_N_MAX}, got {n}")
    size = 1 << n
    reach = [0] * size
    for v in range(size - 1, -1, -1):
        m = 1 << v
        for s in _int_successors(n, v):
            m |= reach[s]
        reach[v] = m
    return reach


def transitive_closure_oracle(n: int) -> set[tuple[int, int]]:
    """Reflexive-transitive closure of the one-step operators, as pairs.

    Independent of :func:`is_degraded`; exists to validate it.
    """
    pairs: set[tuple[int, int]] = set()
    for u, mask in enumerate(reachability_masks(n)):
        while mask:
            low = mask & -mask
            pairs.add((u, low.bit_length() - 1))
            mask ^= low
    return pairs
