"""Polar-code construction via chain decomposition of the index order.

The library splits the 2**n synthetic-channel indices into the minimum
number of totally ordered chains (via maximum bipartite matching on the
comparability graph) and then solves code construction with one binary
search per chain, so only a sublinear number of reliability evaluations
is ever performed.
"""

from .antichain_math import (ComplexityBounds, LevelProfile,
                             asymptotic_estimate, complexity_bounds,
                             level_profile, max_antichain_size,
                             signed_sum_zero_count)
from .chain_cover import (BipartiteComparabilityGraph, ChainPartition,
                          Matching, build_comparability_edges,
                          chains_to_matching, find_partition_violation,
                          load_partition, matching_to_chains,
                          maximum_matching, save_partition, verify_partition)
from .channels import (BmsChannelModel, EvaluationCounter, all_bhattacharyya,
                       bhattacharyya, counted_bhattacharyya,
                       parse_channel_spec)
from .constructor import (EvaluationReport, FpResult, FrResult, fp_construct,
                          fp_naive, fr_construct)
from .index_poset import (ChannelIndex, OnesSet, apply_addition,
                          apply_left_swap, binary_expansion, dominates,
                          index_from_bits, is_degraded, one_step_successors,
                          rank, reachability_masks, to_ones_set,
                          transitive_closure_oracle)

__version__ = "0.1.0"

__all__ = [
    "BipartiteComparabilityGraph",
    "BmsChannelModel",
    "ChainPartition",
    "ChannelIndex",
    "ComplexityBounds",
    "EvaluationCounter",
    "EvaluationReport",
    "FpResult",
    "FrResult",
    "LevelProfile",
    "Matching",
    "OnesSet",
    "all_bhattacharyya",
    "apply_addition",
    "apply_left_swap",
    "asymptotic_estimate",
    "bhattacharyya",
    "binary_expansion",
    "build_comparability_edges",
    "chains_to_matching",
    "complexity_bounds",
    "counted_bhattacharyya",
    "dominates",
    "find_partition_violation",
    "fp_construct",
    "fp_naive",
    "fr_construct",
    "index_from_bits",
    "is_degraded",
    "level_profile",
    "load_partition",
    "matching_to_chains",
    "max_antichain_size",
    "maximum_matching",
    "one_step_successors",
    "parse_channel_spec",
    "rank",
    "reachability_masks",
    "save_partition",
    "signed_sum_zero_count",
    "to_ones_set",
    "transitive_closure_oracle",
    "verify_partition",
]
