"""
Graph construction: validated constructors, named families and graph operations.

Family constructors use fixed labelings:
- path: edges (i, i+1); cycle adds (n-1, 0)
- star: center is vertex 0
- complete_bipartite(n, m): parts {0..n-1} and {n..n+m-1}
- complete_minus_edge: K_n without the edge (0, 1)
Products place vertex (a, b) at index a * n2 + b.
"""

from typing import Iterable, List, Optional, Sequence, Tuple
from pydantic import ValidationError

from allipoly.core.errors import GraphError
from allipoly.models.graph import Graph, iter_bits


def graph_from_rows(order: int, rows: Sequence[int]) -> Graph:
    """Build a Graph from adjacency rows, converting validation failures to GraphError."""
    try:
        return Graph(order=order, adjacency=tuple(rows))
    except ValidationError as e:
        raise GraphError(f"Invalid adjacency: {e.errors()[0]['msg']}") from e


def new_graph(order: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Create a simple graph from an edge list.

    Duplicate pairs collapse to one edge.

    Args:
        order: Number of vertices n
        edges: Vertex pairs (u, v) with 0 <= u, v < n

    Returns:
        Graph with symmetric adjacency

    Raises:
        GraphError: If an endpoint is out of range or a pair is a self-loop
    """
    if order < 0:
        raise GraphError(f"Order must be non-negative, got {order}")

    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"Edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise GraphError(f"Self-loop at vertex {u} is not allowed in a simple graph")
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    return graph_from_rows(order, rows)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphError(message)


def path(n: int) -> Graph:
    """Path P_n."""
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle C_n."""
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return graph_from_rows(n, [full & ~(1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    """Edgeless graph E_n."""
    _require(n >= 1, f"empty graph needs n >= 1, got {n}")
    return graph_from_rows(n, [0] * n)


def star(n: int) -> Graph:
    """Star S_n = K_{1,n-1} with center 0."""
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return new_graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(n: int, m: int) -> Graph:
    """Complete bipartite K_{n,m} with parts {0..n-1} and {n..n+m-1}."""
    _require(n >= 1 and m >= 1, f"complete bipartite needs n, m >= 1, got ({n}, {m})")
    return new_graph(n + m, [(i, n + j) for i in range(n) for j in range(m)])


def complete_minus_edge(n: int) -> Graph:
    """K_n/e: the complete graph without the edge (0, 1)."""
    _require(n >= 2, f"complete minus edge needs n >= 2, got {n}")
    return remove_edge(complete(n), 0, 1)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 ∪ G2; vertices of G2 are shifted by n1."""
    shift = g1.order
    rows = list(g1.adjacency) + [row << shift for row in g2.adjacency]
    return graph_from_rows(g1.order + g2.order, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 ⊎ G2: disjoint union plus every edge between the two vertex sets."""
    n1, n2 = g1.order, g2.order
    first = ((1 << n1) - 1)
    second = ((1 << n2) - 1) << n1
    rows = [row | second for row in g1.adjacency]
    rows += [(row << n1) | first for row in g2.adjacency]
    return graph_from_rows(n1 + n2, rows)


def complement(graph: Graph) -> Graph:
    """Complement graph on the same vertex set."""
    full = graph.full_mask
    return graph_from_rows(
        graph.order,
        [~row & full & ~(1 << v) for v, row in enumerate(graph.adjacency)],
    )


def add_isolated_vertex(graph: Graph) -> Graph:
    """G ∪ {v} with the new vertex labeled n."""
    return graph_from_rows(graph.order + 1, list(graph.adjacency) + [0])


def _product(g1: Graph, g2: Graph, strong: bool) -> Graph:
    n1, n2 = g1.order, g2.order
    edges: List[Tuple[int, int]] = []
    for a in range(n1):
        for b in range(n2):
            here = a * n2 + b
            # (a, b') with b ~ b'
            for b2 in iter_bits(g2.adjacency[b]):
                edges.append((here, a * n2 + b2))
            for a2 in iter_bits(g1.adjacency[a]):
                # (a', b) with a ~ a'
                edges.append((here, a2 * n2 + b))
                if strong:
                    for b2 in iter_bits(g2.adjacency[b]):
                        edges.append((here, a2 * n2 + b2))
    return new_graph(n1 * n2, edges)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """G1 □ G2."""
    return _product(g1, g2, strong=False)


def strong_product(g1: Graph, g2: Graph) -> Graph:
    """G1 ⊠ G2."""
    return _product(g1, g2, strong=True)


def remove_edge(graph: Graph, u: int, v: int) -> Graph:
    """Copy of the graph without edge (u, v)."""
    if not graph.has_edge(u, v):
        raise GraphError(f"Edge ({u}, {v}) is not in the graph")
    rows = list(graph.adjacency)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return graph_from_rows(graph.order, rows)


def remove_vertex(graph: Graph, v: int) -> Graph:
    """Copy of the graph without vertex v; vertices above v shift down by one."""
    if not 0 <= v < graph.order:
        raise GraphError(f"Vertex {v} outside 0..{graph.order - 1}")
    if graph.order == 1:
        raise GraphError("Removing the only vertex would leave an empty vertex set")
    low_mask = (1 << v) - 1
    rows: List[int] = []
    for u, row in enumerate(graph.adjacency):
        if u == v:
            continue
        rows.append((row & low_mask) | ((row >> (v + 1)) << v))
    return graph_from_rows(graph.order - 1, rows)


def relabel(graph: Graph, permutation: Sequence[int]) -> Graph:
    """Isomorphic copy where vertex v becomes permutation[v]."""
    n = graph.order
    if sorted(permutation) != list(range(n)):
        raise GraphError(f"Not a permutation of 0..{n - 1}: {list(permutation)}")
    rows = [0] * n
    for v, row in enumerate(graph.adjacency):
        target = 0
        for u in iter_bits(row):
            target |= 1 << permutation[u]
        rows[permutation[v]] = target
    return graph_from_rows(n, rows)


FAMILY_NAMES = (
    "path",
    "cycle",
    "complete",
    "empty",
    "star",
    "complete-bipartite",
    "complete-minus-edge",
)


def family_graph(family: str, n: int, m: Optional[int] = None) -> Graph:
    """Build a named family member; "complete-bipartite" also needs m."""
    if family == "complete-bipartite":
        if m is None:
            raise GraphError("complete-bipartite needs both n and m")
        return complete_bipartite(n, m)

    builders = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "empty": empty,
        "star": star,
        "complete-minus-edge": complete_minus_edge,
    }
    if family not in builders:
        raise GraphError(f"Unknown family {family!r}; expected one of {', '.join(FAMILY_NAMES)}")
    return builders[family](n)
