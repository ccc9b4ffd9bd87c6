import pytest

from polarorder import (build_comparability_edges, matching_to_chains,
                        maximum_matching)


@pytest.fixture(scope="session")
def partitions():
    """Canonical minimum chain partitions for n = 1..10, built once."""
    out = {}
    for n in range(1, 11):
        graph = build_comparability_edges(n)
        out[n] = matching_to_chains(maximum_matching(graph))
    return out
