"""Minimum chain partition of the index order via bipartite matching.

The comparability graph has an edge per strictly ordered pair of
indices.  A maximum matching joins matched pairs into paths, and because
the edge relation is transitively closed each path is a chain; the
resulting partition has 2^n - |matching| chains, the minimum possible.
The partition depends only on n, never on the channel, so it is worth
saving and reloading.

Partition file format (ASCII, exact bytes)::

    polarorder-chains v1 n=<n> chains=<K>
    <chain as space-separated decimal indices, most degraded first>
    ...

One line per chain, K lines total, single spaces, trailing newline.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from .index_poset import N_MAX, dominates

CHAIN_COVER_N_MAX = 12
FORMAT_TAG = "polarorder-chains v1"


@dataclass(frozen=True)
class BipartiteComparabilityGraph:
    """Left/right copies of [0, 2^n) with an edge per strictly ordered pair.

    ``adjacency[u]`` lists the strict upgrades of ``u`` in ascending
    order; upgrades always have larger integer value, so u < v on every
    edge.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs)


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint set of comparability edges."""

    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        size = 1 << self.n
        left: set[int] = set()
        right: set[int] = set()
        for u, v in self.pairs:
            if not (0 <= u < size and 0 <= v < size) or v <= u:
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")
            if u in left:
                raise ValueError(f"left vertex {u} matched twice")
            if v in right:
                raise ValueError(f"right vertex {v} matched twice")
            left.add(u)
            right.add(v)


@dataclass(frozen=True)
class ChainPartition:
    """Disjoint chains covering [0, 2^n), each most-degraded first."""

    n: int
    chains: tuple[tuple[int, ...], ...]


def build_comparability_edges(
        n: int, n_max: int = CHAIN_COVER_N_MAX) -> BipartiteComparabilityGraph:
    """All strictly ordered pairs, found with the one-position dominance test."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > n_max:
        raise ValueError(
            f"n={n} exceeds the comparability-graph cap n_max={n_max}; "
            "the edge set grows like 4^n, raise n_max explicitly if you "
            "accept the memory cost")
    size = 1 << n
    adjacency = tuple(
        tuple(v for v in range(u + 1, size) if dominates(n, u, v))
        for u in range(size))
    return BipartiteComparabilityGraph(n, adjacency)


def maximum_matching(graph: BipartiteComparabilityGraph) -> Matching:
    """Hopcroft-Karp maximum matching with a fixed, reproducible scan order.

    Left vertices are processed ascending and adjacency lists are already
    ascending, so repeated runs return the identical matching.
    """
    size = 1 << graph.n
    adj = graph.adjacency
    inf = size + 1
    match_l = [-1] * size
    match_r = [-1] * size
    dist = [0] * size

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(size):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found_free = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found_free = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found_free

    def augment(root: int) -> bool:
        # iterative DFS through the level graph; augmenting paths can be
        # long enough to overflow the recursion limit at the size cap
        stack = [root]
        iters = [iter(adj[root])]
        via: list[int] = []
        while stack:
            u = stack[-1]
            descended = False
            for v in iters[-1]:
                w = match_r[v]
                if w == -1:
                    match_l[u] = v
                    match_r[v] = u
                    for depth in range(len(stack) - 2, -1, -1):
                        uu = stack[depth]
                        vv = via[depth]
                        match_l[uu] = vv
                        match_r[vv] = uu
                    return True
                if dist[w] == dist[u] + 1:
                    via.append(v)
                    stack.append(w)
                    iters.append(iter(adj[w]))
                    descended = True
                    break
            if not descended:
                dist[u] = inf
                stack.pop()
                iters.pop()
                if via:
                    via.pop()
        return False

    while bfs():
        for u in range(size):
            if match_l[u] == -1:
                augment(u)

    pairs = frozenset(
        (u, match_l[u]) for u in range(size) if match_l[u] != -1)
    return Matching(graph.n, pairs)


def matching_to_chains(matching: Matching) -> ChainPartition:
    """Join matched pairs into maximal paths; each path is a chain.

    Matched edges always ascend (u < v), so following them terminates and
    unmatched-on-the-right vertices are exactly the chain heads.  Heads
    are visited ascending, which fixes the chain order.
    """
    size = 1 << matching.n
    nxt: dict[int, int] = {}
    matched_right: set[int] = set()
    for u, v in matching.pairs:
        nxt[u] = v
        matched_right.add(v)
    chains = []
    for head in range(size):
        if head in matched_right:
            continue
        chain = [head]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(tuple(chain))
    return ChainPartition(matching.n, tuple(chains))


def chains_to_matching(partition: ChainPartition) -> Matching:
    """Consecutive in-chain pairs; inverse of :func:`matching_to_chains`."""
    violation = find_partition_violation(partition)
    if violation is not None:
        raise ValueError(f"invalid partition: {violation}")
    pairs = frozenset(
        (chain[t], chain[t + 1])
        for chain in partition.chains
        for t in range(len(chain) - 1))
    return Matching(partition.n, pairs)


def find_partition_violation(partition: ChainPartition) -> str | None:
    """Explain the first violated partition condition, or None if valid.

    Chains are checked pairwise, not just between neighbours, so this is
    the trustworthy-but-quadratic verifier.
    """
    size = 1 << partition.n
    seen: set[int] = set()
    for ci, chain in enumerate(partition.chains):
        if not chain:
            return f"chain {ci} is empty"
        for idx in chain:
            if not 0 <= idx < size:
                return f"index {idx} out of range for n={partition.n}"
            if idx in seen:
                return f"index {idx} appears more than once"
            seen.add(idx)
    if len(seen) != size:
        missing = next(i for i in range(size) if i not in seen)
        return f"index {missing} is not covered"
    for ci, chain in enumerate(partition.chains):
        for a in range(len(chain)):
            for b in range(a + 1, len(chain)):
                if not dominates(partition.n, chain[a], chain[b]):
                    return (f"chain {ci} is not totally ordered: index "
                            f"{chain[a]} does not precede {chain[b]}")
    return None


def verify_partition(partition: ChainPartition) -> bool:
    """True iff disjoint, covering, and chainwise totally ordered."""
    return find_partition_violation(partition) is None


_HEADER_RE = re.compile(
    rf"^{re.escape(FORMAT_TAG)} n=(\d+) chains=(\d+)$")


def save_partition(partition: ChainPartition, destination) -> None:
    """Write the exact line format documented in the module docstring."""
    violation = find_partition_violation(partition)
    if violation is not None:
        raise ValueError(f"refusing to save invalid partition: {violation}")
    lines = [f"{FORMAT_TAG} n={partition.n} chains={len(partition.chains)}"]
    lines += [" ".join(str(i) for i in chain) for chain in partition.chains]
    Path(destination).write_text("\n".join(lines) + "\n", encoding="ascii")


def load_partition(source) -> ChainPartition:
    """Parse and fully re-verify a saved partition."""
    text = Path(source).read_text(encoding="ascii")
    if not text.endswith("\n"):
        raise ValueError("parse error: missing trailing newline")
    lines = text.split("\n")[:-1]
    if not lines:
        raise ValueError("parse error: empty file")
    header = _HEADER_RE.match(lines[0])
    if header is None:
        raise ValueError("parse error at line 1: bad header")
    n = int(header.group(1))
    declared = int(header.group(2))
    if not 1 <= n <= N_MAX:
        raise ValueError(f"parse error at line 1: n={n} out of range")
    if len(lines) - 1 != declared:
        raise ValueError(
            f"parse error: header declares {declared} chains, "
            f"file has {len(lines) - 1}")
    chains = []
    seen: set[int] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split(" ")
        if "" in tokens:
            raise ValueError(
                f"parse error at line {lineno}: empty token or stray whitespace")
        try:
            chain = tuple(int(t) for t in tokens)
        except ValueError:
            raise ValueError(
                f"parse error at line {lineno}: non-integer token") from None
        for idx in chain:
            if idx in seen:
                raise ValueError(
                    f"parse error at line {lineno}: duplicated index {idx}")
            seen.add(idx)
        chains.append(chain)
    partition = ChainPartition(n, tuple(chains))
    violation = find_partition_violation(partition)
    if violation is not None:
        raise ValueError(f"invalid partition in {source}: {violation}")
    return partition
