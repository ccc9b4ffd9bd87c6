"""Subset-sum level counts of the index order and the evaluation budget.

The number of indices at each rank equals the number of subsets of
{1..n} with that element sum, i.e. the coefficients of
prod_{i=1..n} (1 + x^i).  The largest coefficient is the width of the
order (its antichain number) and drives both the lower bound and the
binary-search budget for threshold construction.

Everything here is exact integer combinatorics except
:func:`asymptotic_estimate`, which evaluates the closed-form growth rate
in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

PROFILE_N_MAX = 64


@dataclass(frozen=True)
class LevelProfile:
    """counts[r] = number of subsets of {1..n} with element sum r."""

    n: int
    counts: tuple[int, ...]

    @property
    def top_rank(self) -> int:
        return self.n * (self.n + 1) // 2


@dataclass(frozen=True)
class ComplexityBounds:
    """Evaluation-count bounds for threshold construction at size 2**n."""

    n: int
    m: int              # antichain number: the largest level count
    lower: int          # = m; evaluations no algorithm can avoid
    upper_real: float   # m * log2(2^(n+1) / m)
    upper_budget: int   # ceil(upper_real); the enforced integer budget


def _check_n(n: int) -> None:
    if not 1 <= n <= PROFILE_N_MAX:
        raise ValueError(f"n must be in [1, {PROFILE_N_MAX}], got {n}")


def level_profile(n: int) -> LevelProfile:
    """Coefficients of prod_{i=1..n} (1 + x^i), by iterated convolution."""
    _check_n(n)
    top = n * (n + 1) // 2
    counts = [0] * (top + 1)
    counts[0] = 1
    for i in range(1, n + 1):
        for r in range(top, i - 1, -1):
            counts[r] += counts[r - i]
    return LevelProfile(n, tuple(counts))


def max_antichain_size(n: int) -> int:
    """Largest number of subsets of {1..n} sharing one sum."""
    return max(level_profile(n).counts)


def signed_sum_zero_count(n: int) -> int:
    """Number of sign choices making +-1 +-2 ... +-n equal 0.

    Dynamic program over signed partial sums, deliberately independent of
    :func:`level_profile` so the two can cross-check each other.
    """
    _check_n(n)
    top = n * (n + 1) // 2
    width = 2 * top + 1
    dp = [0] * width
    dp[top] = 1  # offset representation: slot `top` holds sum 0
    for i in range(1, n + 1):
        nxt = [0] * width
        for s, ways in enumerate(dp):
            if ways:
                nxt[s - i] += ways
                nxt[s + i] += ways
        dp = nxt
    return dp[top]


def asymptotic_estimate(n: int) -> float:
    """Closed-form growth rate sqrt(6/pi) * 2^n / n^(3/2)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return math.sqrt(6.0 / math.pi) * (2.0 ** n) / n ** 1.5


def complexity_bounds(n: int) -> ComplexityBounds:
    """Lower and upper evaluation bounds for threshold construction.

    Logarithm base 2 throughout: the per-chain binary-search accounting
    counts halvings.  The integer budget is the ceiling of the real bound
    because evaluation counts are integers.
    """
    m = max_antichain_size(n)
    upper_real = m * math.log2((2 ** (n + 1)) / m)
    return ComplexityBounds(n, m, m, upper_real, math.ceil(upper_real))
