"""Threshold and rate construction on a chain partition.

Reliabilities along a chain are non-increasing, so the indices beating a
threshold form a suffix that bisection finds with at most
floor(log2(len) + 1) evaluations; summed over a minimum partition this
is the sublinear budget reported in :class:`EvaluationReport`.

The rate problem narrows a threshold window around the target size with
repeated (memoized) threshold solves, then settles the boundary exactly
by evaluating and sorting only the indices caught between the two cuts.
Ties are broken toward the smaller channel index, which makes the answer
set unique and identical to sorting the full reliability vector.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .antichain_math import complexity_bounds
from .chain_cover import ChainPartition
from .channels import (BmsChannelModel, EvaluationCounter, all_bhattacharyya,
                       counted_bhattacharyya)
from .index_poset import ChannelIndex, dominates

FP_NAIVE_N_MAX = 20
FR_MAX_PROBES = 64


@dataclass(frozen=True)
class EvaluationReport:
    """Distinct reliability evaluations versus the theoretical budget.

    ``per_chain_costs`` counts distinct evaluations charged to each
    chain; for a single threshold solve it always sums to
    ``evaluations`` and respects the per-chain binary-search cap.
    ``threshold_probes`` is 1 for a threshold solve and the number of
    probe thresholds issued for a rate solve (probes reuse memoized
    values, so they are cheaper than fresh solves).
    """

    evaluations: int
    budget_upper: int
    per_chain_costs: tuple[int, ...]
    threshold_probes: int = 1


@dataclass(frozen=True)
class FpResult:
    """Indices whose reliability beats a fixed threshold."""

    n: int
    gamma: float
    selected: frozenset[int]
    report: EvaluationReport


@dataclass(frozen=True)
class FrResult:
    """The fixed-size set of most reliable indices."""

    n: int
    rate: float
    selected: frozenset[int]
    report: EvaluationReport


def _require_partition(partition: ChainPartition, n: int) -> None:
    # structural checks plus neighbour order; the quadratic in-chain
    # verifier lives in chain_cover.verify_partition
    if partition.n != n:
        raise ValueError(f"partition is for n={partition.n}, not n={n}")
    size = 1 << n
    seen: set[int] = set()
    for chain in partition.chains:
        if not chain:
            raise ValueError("invalid partition: empty chain")
        for idx in chain:
            if not 0 <= idx < size or idx in seen:
                raise ValueError(
                    f"invalid partition: bad or repeated index {idx}")
            seen.add(idx)
        for a, b in zip(chain, chain[1:]):
            if not dominates(n, a, b):
                raise ValueError(
                    f"invalid partition: {a} does not precede {b} in its chain")
    if len(seen) != size:
        raise ValueError("invalid partition: does not cover every index")


def _make_evaluator(model: BmsChannelModel, n: int,
                    counter: EvaluationCounter) -> Callable[[int], float]:
    def evaluate(idx: int) -> float:
        return counted_bhattacharyya(model, ChannelIndex(n, idx), counter)
    return evaluate


def _chain_suffix_cut(chain: Sequence[int], gamma: float,
                      evaluate: Callable[[int], float],
                      lo: int = 0, hi: int | None = None) -> tuple[int, int]:
    """First chain position whose reliability is below gamma.

    Returns (cut, evaluations).  Values are non-increasing along the
    chain, so the predicate is monotone and bisection over the full
    chain needs exactly ceil(log2(len + 1)) evaluations, which equals
    floor(log2(len)) + 1.  Callers that already know a bracket for the
    cut may pass it to search only inside.
    """
    if hi is None:
        hi = len(chain)
    cost = 0
    while lo < hi:
        mid = (lo + hi) // 2
        cost += 1
        if evaluate(chain[mid]) < gamma:
            hi = mid
        else:
            lo = mid + 1
    return lo, cost


def fp_construct(model: BmsChannelModel, n: int, gamma: float,
                 partition: ChainPartition, *, jobs: int = 1,
                 counter: EvaluationCounter | None = None) -> FpResult:
    """All indices with reliability strictly below ``gamma``.

    Chain searches are independent; with ``jobs > 1`` they run on a
    thread pool and the merged result is identical to the sequential one.
    """
    if not 0.0 < gamma < 1.0:
        raise ValueError(f"threshold must lie in (0, 1), got {gamma}")
    _require_partition(partition, n)
    if counter is None:
        counter = EvaluationCounter()
    evaluate = _make_evaluator(model, n, counter)

    def search(chain: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
        cut, cost = _chain_suffix_cut(chain, gamma, evaluate)
        return chain[cut:], cost

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(search, partition.chains))
    else:
        results = [search(chain) for chain in partition.chains]

    selected = frozenset(idx for suffix, _ in results for idx in suffix)
    costs = tuple(cost for _, cost in results)
    report = EvaluationReport(
        sum(costs), complexity_bounds(n).upper_budget, costs)
    return FpResult(n, float(gamma), selected, report)


def fp_naive(model: BmsChannelModel, n: int, gamma: float) -> frozenset[int]:
    """Reference threshold answer scanning every synthetic channel."""
    if not 0.0 < gamma < 1.0:
        raise ValueError(f"threshold must lie in (0, 1), got {gamma}")
    if n > FP_NAIVE_N_MAX:
        raise ValueError(f"naive scan is capped at n={FP_NAIVE_N_MAX}, got {n}")
    z = all_bhattacharyya(model, n)
    return frozenset(int(i) for i in (z < gamma).nonzero()[0])


def _span_values(chain: Sequence[int], first: int, last: int,
                 evaluate: Callable[[int], float]) -> list[tuple[float, int]]:
    """(value, index) for chain positions [first, last), evaluated sparsely.

    Values are non-increasing along the chain, so a span whose endpoint
    values agree is constant and its interior needs no evaluation; ties
    (including values that underflow to the same float) cost only two
    evaluations per run.
    """
    out: list[tuple[float, int]] = []

    def fill(a: int, b: int) -> None:
        if a >= b:
            return
        za = evaluate(chain[a])
        zb = evaluate(chain[b - 1])
        if za == zb:
            out.extend((za, chain[p]) for p in range(a, b))
        elif b - a == 2:
            out.append((za, chain[a]))
            out.append((zb, chain[b - 1]))
        else:
            mid = (a + b) // 2
            fill(a, mid)
            fill(mid, b)

    fill(first, last)
    return out


def fr_construct(model: BmsChannelModel, n: int, rate: float,
                 partition: ChainPartition, *, jobs: int = 1,
                 counter: EvaluationCounter | None = None) -> FrResult:
    """The floor(2^n * rate) most reliable indices, ties to smaller index."""
    if not 0.0 < rate < 1.0:
        raise ValueError(f"rate must lie in (0, 1), got {rate}")
    size = 1 << n
    want = math.floor(size * rate)
    if want < 1:
        raise ValueError(f"rate {rate} selects no channel at n={n}")
    _require_partition(partition, n)
    if counter is None:
        counter = EvaluationCounter()
    fresh = _make_evaluator(model, n, counter)

    chains = partition.chains
    chain_of = {idx: ci for ci, chain in enumerate(chains) for idx in chain}
    chain_cost = [0] * len(chains)
    memo: dict[int, float] = {}

    def evaluate(idx: int) -> float:
        z = memo.get(idx)
        if z is None:
            z = fresh(idx)
            memo[idx] = z
            chain_cost[chain_of[idx]] += 1
        return z

    def cuts_for(gamma: float, below: list[int], above: list[int]) -> list[int]:
        # the cut is monotone in the threshold, so for a probe inside the
        # current window it lies between the cuts of the window endpoints
        def one(args: tuple[tuple[int, ...], int, int]) -> int:
            chain, cut_floor, cut_ceil = args
            return _chain_suffix_cut(
                chain, gamma, evaluate, cut_floor, cut_ceil)[0]

        work = list(zip(chains, below, above))
        if jobs > 1:
            # chains hold disjoint index sets, so the shared memo is safe
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                return list(pool.map(one, work))
        return [one(w) for w in work]

    # threshold window: lo selects at most `want`, hi selects at least it
    lo, lo_cuts, lo_count = 0.0, [len(c) for c in chains], 0
    hi, hi_cuts, hi_count = 1.0, [0] * len(chains), size
    probes = 0
    exact_cuts: list[int] | None = None
    while probes < FR_MAX_PROBES:
        # prefer probing at an already-evaluated value inside the window:
        # the boundary is itself a channel value, so this converges even
        # when the boundary is subnormal-small and arithmetic halving of
        # [0, 1] could never reach it; interpolate toward the target size
        inside = sorted({v for v in memo.values() if lo < v < hi})
        if inside:
            fraction = (want - lo_count) / (hi_count - lo_count)
            pick = min(len(inside) - 1, int(fraction * len(inside)))
            mid = inside[pick]
        else:
            mid = (lo + hi) / 2.0
            if not lo < mid < hi:
                break  # window exhausted at double precision
        probes += 1
        cuts = cuts_for(mid, hi_cuts, lo_cuts)
        count = sum(len(c) - cut for c, cut in zip(chains, cuts))
        if count == want:
            exact_cuts = cuts
            break
        if count > want:
            hi, hi_cuts, hi_count = mid, cuts, count
        else:
            lo, lo_cuts, lo_count = mid, cuts, count

    if exact_cuts is not None:
        chosen = [idx for chain, cut in zip(chains, exact_cuts)
                  for idx in chain[cut:]]
    else:
        base = [idx for chain, cut in zip(chains, lo_cuts)
                for idx in chain[cut:]]
        border: list[tuple[float, int]] = []
        for chain, cut_hi, cut_lo in zip(chains, hi_cuts, lo_cuts):
            border.extend(_span_values(chain, cut_hi, cut_lo, evaluate))
        border.sort()
        chosen = base + [idx for _, idx in border[:want - len(base)]]

    report = EvaluationReport(
        len(memo), complexity_bounds(n).upper_budget, tuple(chain_cost),
        threshold_probes=probes)
    return FrResult(n, float(rate), frozenset(chosen), report)
