"""
Hardcoded fixture graphs for the distinguishing comparisons.

Each pair carries the degree sequences of its two graphs; the constructors
re-derive them and refuse to return a graph that does not match.
"""

from typing import Dict, List, Tuple

from allipoly.core.errors import GraphError
from allipoly.models.graph import Graph
from allipoly.services.graphs.builders import new_graph
from allipoly.services.graphs.queries import degree_sequence

GraphPair = Tuple[Graph, Graph]

# Trees on 10 vertices: same degree sequence, same subgraph component polynomial
TREE_PAIR_EDGES: Dict[str, List[Tuple[int, int]]] = {
    # Path 0..7 with pendants 8 (at 3) and 9 (at 4)
    "gamma_1": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8), (4, 9)],
    # Path 0..6 with pendant 7 (at 5) and pendant path 4-8-9
    "gamma_2": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (4, 8), (8, 9)],
}

# Cospectral pair: u1..u6 -> 0..5 for gamma_3; c, a, b, d, e, f -> 0..5 for gamma_4
COSPECTRAL_PAIR_EDGES: Dict[str, List[Tuple[int, int]]] = {
    "gamma_3": [(0, 1), (2, 3), (4, 5), (1, 4), (4, 3), (3, 5), (5, 1)],
    "gamma_4": [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (3, 4)],
}

# v1..v6 -> 0..5: path v1..v6 plus two chords each
EVEN_DEGREE_PAIR_EDGES: Dict[str, List[Tuple[int, int]]] = {
    "gamma_5": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 2), (2, 0)],
    "gamma_6": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 2)],
}

FIXTURE_DEGREE_SEQUENCES: Dict[str, List[int]] = {
    "gamma_1": [3, 3, 2, 2, 2, 2, 1, 1, 1, 1],
    "gamma_2": [3, 3, 2, 2, 2, 2, 1, 1, 1, 1],
    "gamma_3": [3, 3, 3, 3, 1, 1],
    "gamma_4": [5, 2, 2, 2, 2, 1],
    "gamma_5": [4, 2, 2, 2, 2, 2],
    "gamma_6": [3, 3, 3, 2, 2, 1],
}


def fixture_graph(name: str) -> Graph:
    """Build a named fixture graph and check its degree sequence."""
    for table in (TREE_PAIR_EDGES, COSPECTRAL_PAIR_EDGES, EVEN_DEGREE_PAIR_EDGES):
        if name in table:
            edges = table[name]
            break
    else:
        raise GraphError(f"Unknown fixture graph {name!r}")

    graph = new_graph(max(max(e) for e in edges) + 1, edges)
    expected = FIXTURE_DEGREE_SEQUENCES[name]
    actual = degree_sequence(graph)
    if actual != expected:
        raise GraphError(f"Fixture {name} has degree sequence {actual}, expected {expected}")
    return graph


def tree_pair() -> GraphPair:
    """Two 10-vertex trees with different alliance polynomials summing to 94."""
    return fixture_graph("gamma_1"), fixture_graph("gamma_2")


def cospectral_pair() -> GraphPair:
    """Two cospectral 6-vertex graphs."""
    return fixture_graph("gamma_3"), fixture_graph("gamma_4")


def even_degree_pair() -> GraphPair:
    """An all-even-degree graph and a mixed-degree graph on 6 vertices."""
    return fixture_graph("gamma_5"), fixture_graph("gamma_6")
