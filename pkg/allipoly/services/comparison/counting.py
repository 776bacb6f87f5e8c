"""
Brute-force subset counts: matchings, independent sets and dominating sets.
"""

import logging
from typing import List

from allipoly.core.config import guard_config
from allipoly.core.errors import GuardExceededError
from allipoly.models.comparison import CountVector
from allipoly.models.graph import Graph

logger = logging.getLogger(__name__)


def check_comparison_order(graph: Graph, force: bool = False) -> None:
    """Raise GuardExceededError when the graph is too large for the comparison oracles."""
    limit = guard_config.comparison_max_order
    if graph.order > limit:
        if not force:
            raise GuardExceededError("comparison order", graph.order, limit)
        logger.warning(f"Comparison oracle forced at n={graph.order} (guard {limit})")


def matching_counts(graph: Graph, force: bool = False) -> CountVector:
    """counts[k] = number of matchings with k edges.

    Matchings are enumerated by deciding, for the lowest unsettled vertex,
    whether it stays unmatched or pairs with one of its unsettled neighbors.
    """
    check_comparison_order(graph, force)
    adjacency = graph.adjacency
    counts: List[int] = [0] * (graph.order // 2 + 1)

    def extend(unsettled: int, size: int) -> None:
        if not unsettled:
            counts[size] += 1
            return
        low = unsettled & -unsettled
        v = low.bit_length() - 1
        rest = unsettled ^ low
        extend(rest, size)
        partners = adjacency[v] & rest
        while partners:
            pick = partners & -partners
            extend(rest ^ pick, size + 1)
            partners ^= pick

    extend(graph.full_mask, 0)
    return CountVector.from_counts(counts)


def independence_counts(graph: Graph, force: bool = False) -> CountVector:
    """counts[k] = number of independent sets of size k, the empty set included."""
    check_comparison_order(graph, force)
    adjacency = graph.adjacency
    counts = [0] * (graph.order + 1)
    for subset in range(1 << graph.order):
        bits = subset
        independent = True
        while bits:
            low = bits & -bits
            if adjacency[low.bit_length() - 1] & subset:
                independent = False
                break
            bits ^= low
        if independent:
            counts[subset.bit_count()] += 1
    return CountVector.from_counts(counts)


def domination_counts(graph: Graph, force: bool = False) -> CountVector:
    """counts[k] = number of dominating sets of size k."""
    check_comparison_order(graph, force)
    closed = [row | (1 << v) for v, row in enumerate(graph.adjacency)]
    full = graph.full_mask
    counts = [0] * (graph.order + 1)
    for subset in range(1 << graph.order):
        covered = 0
        bits = subset
        while bits:
            low = bits & -bits
            covered |= closed[low.bit_length() - 1]
            bits ^= low
        if covered == full:
            counts[subset.bit_count()] += 1
    return CountVector.from_counts(counts)
