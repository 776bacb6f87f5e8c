"""
Read-only queries on graphs: degrees, neighborhoods and connectivity.
"""

from typing import List

from allipoly.core.errors import GraphError
from allipoly.models.graph import Graph, VertexSet, iter_bits
from allipoly.services.graphs.bitsets import component_masks, is_connected_subset


def _check_vertex(graph: Graph, v: int) -> None:
    if not 0 <= v < graph.order:
        raise GraphError(f"Vertex {v} outside 0..{graph.order - 1}")


def _check_set(graph: Graph, subset: VertexSet) -> None:
    if subset.universe != graph.order:
        raise GraphError(f"Vertex set over {subset.universe} vertices used with a graph of order {graph.order}")


def degree(graph: Graph, v: int) -> int:
    """Degree δ(v) = |N(v)|."""
    _check_vertex(graph, v)
    return graph.adjacency[v].bit_count()


def degree_sequence(graph: Graph) -> List[int]:
    """Degrees sorted non-increasing; first entry is δ_1, last is δ_n."""
    return sorted((row.bit_count() for row in graph.adjacency), reverse=True)


def max_degree(graph: Graph) -> int:
    """δ_1, zero for the order-0 graph."""
    return max((row.bit_count() for row in graph.adjacency), default=0)


def min_degree(graph: Graph) -> int:
    """δ_n, zero for the order-0 graph."""
    return min((row.bit_count() for row in graph.adjacency), default=0)


def neighbors(graph: Graph, v: int) -> List[int]:
    """N(v) in increasing order."""
    _check_vertex(graph, v)
    return list(iter_bits(graph.adjacency[v]))


def degree_in_set(graph: Graph, v: int, subset: VertexSet) -> int:
    """δ_S(v): number of neighbors of v inside S."""
    _check_vertex(graph, v)
    _check_set(graph, subset)
    return (graph.adjacency[v] & subset.bits).bit_count()


def induced_is_connected(graph: Graph, subset: VertexSet) -> bool:
    """Check if the subgraph induced by a nonempty S is connected.

    Raises:
        GraphError: If S is empty or refers to a different vertex range
    """
    _check_set(graph, subset)
    if subset.is_empty():
        raise GraphError("Connectivity of the empty vertex set is undefined")
    return is_connected_subset(graph.adjacency, subset.bits)


def components(graph: Graph) -> List[VertexSet]:
    """Connected components, ordered by their lowest vertex."""
    return [
        VertexSet(bits=mask, universe=graph.order)
        for mask in component_masks(graph.adjacency, graph.full_mask)
    ]


def is_connected(graph: Graph) -> bool:
    """Check if the graph is connected (order 0 counts as disconnected)."""
    return graph.order > 0 and is_connected_subset(graph.adjacency, graph.full_mask)


def is_regular(graph: Graph) -> bool:
    """Check if every vertex has the same degree."""
    return len({row.bit_count() for row in graph.adjacency}) <= 1
