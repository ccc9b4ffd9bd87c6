"""Command-line front end.

Subcommands: ``bounds`` (evaluation-budget table as CSV), ``chains``
(build and save a chain partition), ``construct`` (threshold- or
rate-based code construction), ``hasse`` (cover relation of the index
order), ``verify`` (cross-module self-check suites).

Exit status: 0 on success, 1 on verification failure, 2 on usage or
parameter errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import antichain_math, chain_cover, channels, constructor, index_poset

HASSE_N_MAX = 10
VERIFY_N_MAX = 10


def _parse_n_range(text: str) -> tuple[int, int]:
    """Accepts '8' or '6:24' (inclusive)."""
    if ":" in text:
        first, last = text.split(":", 1)
        lo, hi = int(first), int(last)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad n range {text!r}")
    return lo, hi


def _emit(lines: list[str], output: str | None) -> None:
    body = "\n".join(lines) + "\n"
    if output:
        Path(output).write_text(body, encoding="ascii")
    else:
        sys.stdout.write(body)


def cmd_bounds(args: argparse.Namespace) -> int:
    lo, hi = _parse_n_range(args.n)
    lines = ["n,M,lower_fraction,upper_fraction,upper_raw"]
    for n in range(lo, hi + 1):
        b = antichain_math.complexity_bounds(n)
        size = 2 ** n
        lower = b.m / size
        raw = b.upper_real / size
        upper = min(1.0, raw)
        lines.append(f"{n},{b.m},{lower!r},{upper!r},{raw!r}")
    _emit(lines, args.output)
    return 0


def _build_partition(n: int, n_max: int) -> chain_cover.ChainPartition:
    graph = chain_cover.build_comparability_edges(n, n_max=n_max)
    matching = chain_cover.maximum_matching(graph)
    return chain_cover.matching_to_chains(matching)


def cmd_chains(args: argparse.Namespace) -> int:
    n = args.n
    partition = _build_partition(n, args.n_max)
    out_path = Path(args.output or f"chains-n{n}.txt")
    chain_cover.save_partition(partition, out_path)
    m = antichain_math.max_antichain_size(n)
    ok = len(partition.chains) == m
    status = "matches" if ok else "MISMATCHES"
    print(f"wrote {out_path}: {len(partition.chains)} chains; "
          f"{status} the antichain number {m}")
    return 0 if ok else 1


def _obtain_partition(n: int, partition_path: str | None, output: Path,
                      n_max: int) -> chain_cover.ChainPartition:
    if partition_path:
        partition = chain_cover.load_partition(partition_path)
        if partition.n != n:
            raise ValueError(
                f"partition file is for n={partition.n}, not n={n}")
        return partition
    cache = output.parent / f"chains-n{n}.txt"
    if cache.exists():
        partition = chain_cover.load_partition(cache)
        if partition.n != n:
            raise ValueError(f"cache {cache} is for n={partition.n}, not n={n}")
        return partition
    partition = _build_partition(n, n_max)
    chain_cover.save_partition(partition, cache)
    print(f"cached partition at {cache}")
    return partition


def cmd_construct(args: argparse.Namespace) -> int:
    model = channels.parse_channel_spec(args.channel)
    n = args.n
    output = Path(args.output or f"selected-n{n}.txt")
    partition = _obtain_partition(n, args.partition, output, args.n_max)
    if args.threshold is not None:
        result = constructor.fp_construct(
            model, n, args.threshold, partition, jobs=args.jobs)
        header = f"# n={n} gamma={args.threshold!r}"
    else:
        result = constructor.fr_construct(
            model, n, args.rate, partition, jobs=args.jobs)
        header = f"# n={n} rate={args.rate!r} size={len(result.selected)}"
    lines = [header] + [str(i) for i in sorted(result.selected)]
    output.write_text("\n".join(lines) + "\n", encoding="ascii")
    evaluations = result.report.evaluations
    size = 1 << n
    print(f"selected {len(result.selected)} of {size} channels -> {output}")
    print(f"evaluations: {evaluations}")
    print(f"budget: {result.report.budget_upper}")
    print(f"savings: {1.0 - evaluations / size:.6f}")
    return 0


def cmd_hasse(args: argparse.Namespace) -> int:
    n = args.n
    if n > HASSE_N_MAX:
        raise ValueError(f"hasse is capped at n={HASSE_N_MAX}, got {n}")
    size = 1 << n
    # the order is graded by the one-position sum, so j covers i exactly
    # when i precedes j and their ranks differ by one
    ranks = [index_poset.rank(index_poset.ChannelIndex(n, v))
             for v in range(size)]
    lines = []
    for i in range(size):
        for j in range(i + 1, size):
            if ranks[j] == ranks[i] + 1 and index_poset.dominates(n, i, j):
                lines.append(f"{i} {j}")
    _emit(lines, args.output)
    return 0


def _suite_order_oracle(n_max: int) -> None:
    for n in range(1, n_max + 1):
        masks = index_poset.reachability_masks(n)
        size = 1 << n
        for u in range(size):
            expected = masks[u]
            for v in range(size):
                got = index_poset.dominates(n, u, v)
                assert got == bool((expected >> v) & 1), \
                    f"n={n}: dominance({u}, {v}) = {got} disagrees with closure"


def _suite_dilworth(n_max: int) -> None:
    for n in range(1, n_max + 1):
        partition = _build_partition(n, max(n, chain_cover.CHAIN_COVER_N_MAX))
        m = antichain_math.max_antichain_size(n)
        assert len(partition.chains) == m, \
            f"n={n}: {len(partition.chains)} chains != antichain number {m}"


def _suite_verify_partition_detects_faults(n_max: int) -> None:
    partition = _build_partition(4, chain_cover.CHAIN_COVER_N_MAX)
    assert chain_cover.verify_partition(partition), "clean partition rejected"
    chains = [list(c) for c in partition.chains]
    # swap one index between two chains: cover still holds, order breaks
    chains[0][0], chains[1][0] = chains[1][0], chains[0][0]
    broken = chain_cover.ChainPartition(
        4, tuple(tuple(c) for c in chains))
    assert not chain_cover.verify_partition(broken), \
        "verify_partition accepted a partition with a swapped pair"


def _suite_z_monotonicity(n_max: int) -> None:
    tolerance = 1e-12
    for n in range(1, min(n_max, 8) + 1):
        masks = index_poset.reachability_masks(n)
        size = 1 << n
        for eps in (0.1, 0.25, 0.5, 0.75, 0.9):
            z = channels.all_bhattacharyya(channels.BmsChannelModel.bec(eps), n)
            for u in range(size):
                mask = masks[u]
                while mask:
                    low = mask & -mask
                    v = low.bit_length() - 1
                    mask ^= low
                    assert z[u] >= z[v] - tolerance, \
                        f"n={n} eps={eps}: Z[{u}]={z[u]} < Z[{v}]={z[v]}"


def _suite_fp_equivalence(n_max: int) -> None:
    thresholds = (0.001, 0.05, 0.25, 0.5, 0.75, 0.95, 0.999)
    for n in range(2, n_max + 1):
        partition = _build_partition(n, max(n, chain_cover.CHAIN_COVER_N_MAX))
        for eps in (0.1, 0.5, 0.9):
            model = channels.BmsChannelModel.bec(eps)
            for gamma in thresholds:
                fast = constructor.fp_construct(model, n, gamma, partition)
                slow = constructor.fp_naive(model, n, gamma)
                assert fast.selected == slow, \
                    f"n={n} eps={eps} gamma={gamma}: selection mismatch"


def _suite_budget(n_max: int) -> None:
    for n in range(2, n_max + 1):
        partition = _build_partition(n, max(n, chain_cover.CHAIN_COVER_N_MAX))
        budget = antichain_math.complexity_bounds(n).upper_budget
        for eps in (0.1, 0.5, 0.9):
            model = channels.BmsChannelModel.bec(eps)
            for gamma in (0.01, 0.5, 0.99):
                result = constructor.fp_construct(model, n, gamma, partition)
                used = result.report.evaluations
                assert used <= budget, f"n={n}: {used} evaluations > {budget}"
                for cost, chain in zip(result.report.per_chain_costs,
                                       partition.chains):
                    cap = len(chain).bit_length()  # floor(log2 L) + 1
                    assert cost <= cap, \
                        f"n={n}: chain cost {cost} > cap {cap}"


_VERIFY_SUITES = (
    ("order-oracle", _suite_order_oracle),
    ("dilworth-identity", _suite_dilworth),
    ("verify_partition-detects-faults", _suite_verify_partition_detects_faults),
    ("z-monotonicity", _suite_z_monotonicity),
    ("fp-equivalence", _suite_fp_equivalence),
    ("evaluation-budget", _suite_budget),
)


def cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    for name, suite in _VERIFY_SUITES:
        try:
            suite(args.n_max)
        except AssertionError as exc:
            print(f"FAIL {name}: {exc}")
            failures += 1
        else:
            print(f"ok {name}")
    if failures:
        print(f"{failures} of {len(_VERIFY_SUITES)} suites failed")
        return 1
    print(f"all {len(_VERIFY_SUITES)} suites passed (n_max={args.n_max})")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarorder",
        description="Polar-code construction via chain decomposition of "
                    "the synthetic-channel partial order.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser(
        "bounds", help="CSV table of evaluation-count bounds per n")
    p_bounds.add_argument("--n", required=True,
                          help="single n or inclusive range 'lo:hi'")
    p_bounds.add_argument("--output", help="write CSV here instead of stdout")
    p_bounds.set_defaults(func=cmd_bounds)

    p_chains = sub.add_parser(
        "chains", help="build and save the minimum chain partition for n")
    p_chains.add_argument("--n", type=int, required=True)
    p_chains.add_argument("--output", help="partition file path "
                          "(default chains-n<n>.txt)")
    p_chains.add_argument("--n-max", type=int,
                          default=chain_cover.CHAIN_COVER_N_MAX,
                          help="override the comparability-graph size cap")
    p_chains.set_defaults(func=cmd_chains)

    p_con = sub.add_parser(
        "construct", help="solve the fixed-performance or fixed-rate problem")
    p_con.add_argument("channel", help="channel spec, e.g. bec:0.5")
    p_con.add_argument("--n", type=int, required=True)
    mode = p_con.add_mutually_exclusive_group(required=True)
    mode.add_argument("--threshold", type=float,
                      help="reliability threshold in (0, 1)")
    mode.add_argument("--rate", type=float, help="code rate in (0, 1)")
    p_con.add_argument("--partition", help="existing partition file")
    p_con.add_argument("--output", help="selected-index file "
                       "(default selected-n<n>.txt)")
    p_con.add_argument("--jobs", type=int, default=1,
                       help="worker threads for chain searches")
    p_con.add_argument("--n-max", type=int,
                       default=chain_cover.CHAIN_COVER_N_MAX,
                       help="override the comparability-graph size cap")
    p_con.set_defaults(func=cmd_construct)

    p_hasse = sub.add_parser(
        "hasse", help="emit the cover relation, one 'i j' pair per line")
    p_hasse.add_argument("--n", type=int, required=True)
    p_hasse.add_argument("--output", help="write here instead of stdout")
    p_hasse.set_defaults(func=cmd_hasse)

    p_verify = sub.add_parser(
        "verify", help="run the cross-module property suites")
    p_verify.add_argument("--n-max", type=int, default=6,
                          help=f"largest n exercised (at most {VERIFY_N_MAX})")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not 1 <= args.n_max <= VERIFY_N_MAX:
        print(f"error: --n-max must be in [1, {VERIFY_N_MAX}]",
              file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
