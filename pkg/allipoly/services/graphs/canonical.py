"""
Canonical labeling and isomorphism-free enumeration of small graphs.

The canonical form of a graph is the graph6 encoding of the relabeling whose
upper-triangle bit string (column order) is lexicographically smallest over
all vertex permutations. Labels are assigned one column at a time; a column
is fixed entirely by the vertices placed before it, so only placements that
reach the smallest column value at each depth can lead to the minimum. Twin
vertices (N(u) minus v equals N(v) minus u) are interchangeable by an
automorphism, so only one of each twin group is branched on.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Set

from allipoly.core.config import guard_config
from allipoly.core.errors import GraphError, GuardExceededError
from allipoly.models.graph import Graph
from allipoly.services.graphs.builders import graph_from_rows, relabel
from allipoly.services.graphs.formats import from_graph6, to_graph6

logger = logging.getLogger(__name__)


class _Search:
    """Mutable state of one canonical labeling search."""

    def __init__(self, adjacency: Sequence[int]) -> None:
        self.adjacency = adjacency
        self.best_columns: Optional[List[int]] = None
        self.best_order: List[int] = []

    def run(self, placed: List[int], remaining: int, columns: List[int]) -> None:
        if not remaining:
            if self.best_columns is None or columns < self.best_columns:
                self.best_columns = list(columns)
                self.best_order = list(placed)
            return

        values: Dict[int, int] = {}
        candidate_bits = remaining
        while candidate_bits:
            low = candidate_bits & -candidate_bits
            candidate = low.bit_length() - 1
            candidate_bits ^= low
            row = self.adjacency[candidate]
            value = 0
            for p in placed:
                value = (value << 1) | (row >> p & 1)
            values[candidate] = value

        lowest = min(values.values())
        depth = len(placed)
        if self.best_columns is not None:
            if columns + [lowest] > self.best_columns[:depth + 1]:
                return

        branched: List[int] = []
        for candidate, value in values.items():
            if value != lowest:
                continue
            if any(_are_twins(self.adjacency, candidate, other) for other in branched):
                continue
            branched.append(candidate)
            placed.append(candidate)
            columns.append(lowest)
            self.run(placed, remaining & ~(1 << candidate), columns)
            columns.pop()
            placed.pop()


def _are_twins(adjacency: Sequence[int], u: int, v: int) -> bool:
    return adjacency[u] & ~(1 << v) == adjacency[v] & ~(1 << u)


def canonical_labeling(graph: Graph, force: bool = False) -> List[int]:
    """Permutation mapping each vertex to its canonical label.

    Args:
        graph: Graph to label
        force: Skip the order guard

    Returns:
        List where entry v is the canonical label of vertex v

    Raises:
        GuardExceededError: If the order exceeds the canonical guard and force is not set
    """
    limit = guard_config.canonical_max_order
    if graph.order > limit:
        if not force:
            raise GuardExceededError("canonical form order", graph.order, limit)
        logger.warning(f"Canonical labeling forced at n={graph.order} (guard {limit})")

    search = _Search(graph.adjacency)
    search.run([], graph.full_mask, [])

    permutation = [0] * graph.order
    for label, vertex in enumerate(search.best_order):
        permutation[vertex] = label
    return permutation


def canonical_graph(graph: Graph, force: bool = False) -> Graph:
    """The canonical relabeling of a graph."""
    return relabel(graph, canonical_labeling(graph, force=force))


def canonical_form(graph: Graph, force: bool = False) -> bytes:
    """Canonical byte string; equal for two graphs iff they are isomorphic."""
    return to_graph6(canonical_graph(graph, force=force)).encode("ascii")


def are_isomorphic(g1: Graph, g2: Graph, force: bool = False) -> bool:
    """Check isomorphism through canonical forms."""
    if g1.order != g2.order or g1.size != g2.size:
        return False
    return canonical_form(g1, force=force) == canonical_form(g2, force=force)


def _check_enumeration_order(n: int, force: bool) -> None:
    if n < 1:
        raise GraphError(f"Enumeration needs n >= 1, got {n}")
    limit = guard_config.enumeration_max_order
    if n > limit:
        if not force:
            raise GuardExceededError("enumeration order", n, limit)
        logger.warning(f"Enumeration forced at n={n} (guard {limit})")


def enumerate_labeled(n: int, force: bool = False) -> Iterator[Graph]:
    """Yield all 2^C(n,2) labeled graphs on vertices 0..n-1."""
    _check_enumeration_order(n, force)
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for index, (u, v) in enumerate(pairs):
            if mask >> index & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield graph_from_rows(n, rows)


def _augment_chunk(representatives: List[str], force: bool) -> Set[bytes]:
    """Canonical forms of every one-vertex extension of the given graph6 graphs."""
    forms: Set[bytes] = set()
    for text in representatives:
        base = from_graph6(text)
        n = base.order
        for attach in range(1 << n):
            rows = list(base.adjacency)
            for u in range(n):
                if attach >> u & 1:
                    rows[u] |= 1 << n
            rows.append(attach)
            forms.add(canonical_form(graph_from_rows(n + 1, rows), force=force))
    return forms


def _split(items: List[str], parts: int) -> List[List[str]]:
    size, extra = divmod(len(items), parts)
    chunks: List[List[str]] = []
    start = 0
    for index in range(parts):
        end = start + size + (1 if index < extra else 0)
        if end > start:
            chunks.append(items[start:end])
        start = end
    return chunks


def _augment(previous: Set[bytes], force: bool, threads: int) -> Set[bytes]:
    representatives = sorted(form.decode("ascii") for form in previous)
    if threads <= 1 or len(representatives) < 2:
        return _augment_chunk(representatives, force)

    forms: Set[bytes] = set()
    with ProcessPoolExecutor(max_workers=threads) as executor:
        futures = [
            executor.submit(_augment_chunk, chunk, force)
            for chunk in _split(representatives, threads)
        ]
        for future in futures:
            forms |= future.result()
    return forms


def _level_forms(max_n: int, force: bool, threads: int) -> Iterator[Set[bytes]]:
    # Every graph on n vertices is some graph on n-1 vertices plus one vertex
    forms = {canonical_form(graph_from_rows(1, [0]))}
    for order in range(1, max_n + 1):
        if order > 1:
            forms = _augment(forms, force, threads)
        logger.debug(f"Order {order}: {len(forms)} isomorphism classes")
        yield forms


def _decoded(forms: Set[bytes]) -> Iterator[Graph]:
    for form in sorted(forms):
        yield from_graph6(form.decode("ascii"))


def nonisomorphic_levels(max_n: int, force: bool = False, threads: int = 1) -> Iterator[List[Graph]]:
    """Yield the canonical representatives of orders 1, 2, ..., max_n in turn.

    Each level extends the previous representatives by every neighborhood of a
    new vertex and deduplicates by canonical form.
    """
    _check_enumeration_order(max_n, force)
    for forms in _level_forms(max_n, force, threads):
        yield list(_decoded(forms))


def enumerate_nonisomorphic(
    n: int,
    force: bool = False,
    threads: int = 1,
    method: str = "augment",
) -> Iterator[Graph]:
    """Stream one canonical representative per isomorphism class of graphs on n vertices.

    Args:
        n: Order of the graphs
        force: Skip the enumeration guard
        threads: Number of worker processes for the augmentation steps
        method: "augment" extends smaller representatives; "labeled" filters
            all 2^C(n,2) labeled graphs and serves as an oracle

    Returns:
        Iterator over canonical graphs in canonical-form order; graphs are
        decoded as they are consumed

    Raises:
        GuardExceededError: If n exceeds the enumeration guard and force is not set
        GraphError: If n is below 1 or the method is unknown
    """
    _check_enumeration_order(n, force)

    if method == "labeled":
        forms = {canonical_form(g, force=force) for g in enumerate_labeled(n, force=force)}
    elif method == "augment":
        *_, forms = _level_forms(n, force, threads)
    else:
        raise GraphError(f"Unknown enumeration method {method!r}")
    return _decoded(forms)
