"""
Alliance polynomial engine.

A nonempty vertex set S is a defensive k-alliance when every v in S has
δ_S(v) >= δ_S̄(v) + k. Its exact index is

    k_S = min over v in S of (2·δ_S(v) - δ(v))

and A(G;x) sums x^(n + k_S) over every S inducing a connected subgraph.
Subsets are the bit patterns 1 .. 2^n - 1; the range can be split into
contiguous chunks counted in worker processes and merged by addition.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from allipoly.core.config import guard_config, parallel_config
from allipoly.core.errors import GraphError, GuardExceededError
from allipoly.models.alliance import AlliancePolynomial, SizeCounts
from allipoly.models.graph import Graph, VertexSet
from allipoly.services.graphs.bitsets import is_connected_subset

logger = logging.getLogger(__name__)


def _check_subset(graph: Graph, subset: VertexSet) -> None:
    if subset.universe != graph.order:
        raise GraphError(f"Vertex set over {subset.universe} vertices used with a graph of order {graph.order}")
    if subset.is_empty():
        raise GraphError("Alliances are nonempty vertex sets")


def is_defensive_k_alliance(graph: Graph, subset: VertexSet, k: int) -> bool:
    """Check δ_S(v) >= δ_S̄(v) + k for every v in S.

    Raises:
        GraphError: If S is empty or refers to a different vertex range
    """
    _check_subset(graph, subset)
    inside_mask = subset.bits
    outside_mask = subset.complement().bits
    for v in subset.members():
        row = graph.adjacency[v]
        if (row & inside_mask).bit_count() < (row & outside_mask).bit_count() + k:
            return False
    return True


def subset_index(adjacency: Sequence[int], degrees: Sequence[int], subset: int) -> int:
    """k_S for a raw bit pattern; subset must be nonempty."""
    index = len(adjacency)
    bits = subset
    while bits:
        low = bits & -bits
        v = low.bit_length() - 1
        bits ^= low
        value = 2 * (adjacency[v] & subset).bit_count() - degrees[v]
        if value < index:
            index = value
    return index


def exact_alliance_index(graph: Graph, subset: VertexSet) -> int:
    """Exact index k_S = min over v in S of δ_S(v) - δ_S̄(v)."""
    _check_subset(graph, subset)
    degrees = [row.bit_count() for row in graph.adjacency]
    return subset_index(graph.adjacency, degrees, subset.bits)


def _count_range(adjacency: Tuple[int, ...], start: int, end: int) -> Dict[int, int]:
    """Histogram k -> count over connected subsets with patterns in [start, end)."""
    degrees = [row.bit_count() for row in adjacency]
    counts: Counter = Counter()
    for subset in range(start, end):
        if is_connected_subset(adjacency, subset):
            counts[subset_index(adjacency, degrees, subset)] += 1
    return dict(counts)


def partition_range(total: int, parts: int) -> List[Tuple[int, int]]:
    """Split [1, total) into at most ``parts`` contiguous nonempty chunks."""
    span = total - 1
    parts = max(1, min(parts, span)) if span > 0 else 1
    size, extra = divmod(span, parts)
    chunks: List[Tuple[int, int]] = []
    start = 1
    for index in range(parts):
        end = start + size + (1 if index < extra else 0)
        if end > start:
            chunks.append((start, end))
        start = end
    return chunks


def _check_order(graph: Graph, force: bool) -> None:
    if graph.order < 1:
        raise GraphError("The alliance polynomial needs a graph with at least one vertex")
    limit = guard_config.brute_force_max_order
    if graph.order > limit:
        if not force:
            raise GuardExceededError("brute-force order", graph.order, limit)
        logger.warning(f"Brute-force enumeration forced at n={graph.order} (guard {limit})")


def alliance_polynomial(
    graph: Graph,
    force: bool = False,
    threads: Optional[int] = None,
    processes: bool = True,
) -> AlliancePolynomial:
    """Compute A(G;x) by enumerating every vertex subset.

    Args:
        graph: Graph of order 1 .. brute-force guard
        force: Skip the brute-force order guard
        threads: Number of contiguous partitions (defaults to settings)
        processes: Count partitions in worker processes; False counts them in-process

    Returns:
        AlliancePolynomial with exact counts

    Raises:
        GraphError: If the graph has no vertices
        GuardExceededError: If the order exceeds the guard and force is not set
    """
    _check_order(graph, force)
    if threads is None:
        threads = parallel_config.default_threads
    if threads < 1:
        raise GraphError(f"Thread count must be at least 1, got {threads}")

    chunks = partition_range(1 << graph.order, threads)
    totals: Counter = Counter()

    if processes and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=len(chunks)) as executor:
            futures = [
                executor.submit(_count_range, graph.adjacency, start, end)
                for start, end in chunks
            ]
            for future in futures:
                totals.update(future.result())
    else:
        for start, end in chunks:
            totals.update(_count_range(graph.adjacency, start, end))

    logger.debug(f"Counted {sum(totals.values())} connected subsets of n={graph.order} in {len(chunks)} partitions")
    return AlliancePolynomial(order=graph.order, coefficients=dict(totals))


def size_counts(graph: Graph, force: bool = False) -> SizeCounts:
    """Connected induced subgraphs by order and cut vertex sets by cardinality."""
    _check_order(graph, force)
    n = graph.order
    connected = [0] * n
    for subset in range(1, 1 << n):
        if is_connected_subset(graph.adjacency, subset):
            connected[subset.bit_count() - 1] += 1

    # A set of size j is a cut set iff its complement (size n - j) is not connected
    cut_sets = [comb(n, n - j) - connected[n - j - 1] for j in range(n)]
    return SizeCounts(order=n, connected=connected, cut_sets=cut_sets)
