"""
Characteristic, Tutte and subgraph component polynomials.

The characteristic polynomial uses sympy's division-free Berkowitz algorithm
on the integer adjacency matrix. The Tutte polynomial uses deletion and
contraction on a multigraph stored as a sorted tuple of (u, v) pairs; a loop
is a pair (v, v).
"""

import logging
from collections import Counter
from typing import Dict, Tuple

from sympy import Matrix, symbols

from allipoly.core.config import guard_config
from allipoly.core.errors import GuardExceededError, PolynomialError
from allipoly.models.graph import Graph
from allipoly.models.polynomial import BivariatePoly, IntPolynomial
from allipoly.services.comparison.counting import check_comparison_order
from allipoly.services.graphs.bitsets import component_count

logger = logging.getLogger(__name__)

Edges = Tuple[Tuple[int, int], ...]
Terms = Dict[Tuple[int, int], int]

PIVOTS = ("lowest", "highest")


def characteristic_polynomial(graph: Graph, force: bool = False) -> IntPolynomial:
    """det(λI - A) with exact integer coefficients, constant term first."""
    check_comparison_order(graph, force)
    if graph.order == 0:
        return IntPolynomial(coefficients=(1,))

    matrix = Matrix(graph.order, graph.order, lambda i, j: 1 if graph.has_edge(i, j) else 0)
    lam = symbols("lambda")
    poly = matrix.charpoly(lam)
    # all_coeffs lists the leading coefficient first
    return IntPolynomial.from_coefficients([int(c) for c in reversed(poly.all_coeffs())])


def _connected_without(edges: Edges, skip: int, source: int, target: int) -> bool:
    reached = {source}
    frontier = [source]
    while frontier:
        v = frontier.pop()
        for index, (a, b) in enumerate(edges):
            if index == skip:
                continue
            if a == v and b not in reached:
                reached.add(b)
                frontier.append(b)
            elif b == v and a not in reached:
                reached.add(a)
                frontier.append(a)
    return target in reached


def _contract(edges: Edges, index: int) -> Edges:
    keep, gone = edges[index]
    merged = []
    for position, (a, b) in enumerate(edges):
        if position == index:
            continue
        a = keep if a == gone else a
        b = keep if b == gone else b
        merged.append((min(a, b), max(a, b)))
    return tuple(sorted(merged))


def _delete(edges: Edges, index: int) -> Edges:
    return edges[:index] + edges[index + 1:]


def _shift(terms: Terms, dx: int, dy: int) -> Terms:
    return {(i + dx, j + dy): c for (i, j), c in terms.items()}


def _tutte(edges: Edges, pivot: str, memo: Dict[Edges, Terms]) -> Terms:
    if edges in memo:
        return memo[edges]

    loops = sum(1 for a, b in edges if a == b)
    ordinary = [index for index, (a, b) in enumerate(edges) if a != b]

    if not ordinary:
        result: Terms = {(0, loops): 1}
    elif loops:
        plain = tuple(e for e in edges if e[0] != e[1])
        result = _shift(_tutte(plain, pivot, memo), 0, loops)
    else:
        index = ordinary[0] if pivot == "lowest" else ordinary[-1]
        u, v = edges[index]
        if not _connected_without(edges, index, u, v):
            # Bridge
            result = _shift(_tutte(_contract(edges, index), pivot, memo), 1, 0)
        else:
            total: Counter = Counter(_tutte(_delete(edges, index), pivot, memo))
            total.update(_tutte(_contract(edges, index), pivot, memo))
            result = {key: c for key, c in total.items() if c}

    memo[edges] = result
    return result


def tutte_polynomial(graph: Graph, force: bool = False, pivot: str = "lowest") -> BivariatePoly:
    """T(G;x,y) by deletion and contraction.

    Args:
        graph: Simple graph with at most the Tutte edge guard of edges
        force: Skip the edge guard
        pivot: Which ordinary edge to branch on, "lowest" or "highest"

    Returns:
        BivariatePoly with (i, j) -> coefficient of x^i y^j

    Raises:
        GuardExceededError: If the edge count exceeds the guard and force is not set
    """
    if pivot not in PIVOTS:
        raise PolynomialError(f"Unknown pivot {pivot!r}; expected one of {', '.join(PIVOTS)}")
    limit = guard_config.tutte_max_edges
    if graph.size > limit:
        if not force:
            raise GuardExceededError("Tutte edge count", graph.size, limit)
        logger.warning(f"Tutte deletion-contraction forced at m={graph.size} (guard {limit})")

    memo: Dict[Edges, Terms] = {}
    terms = _tutte(tuple(graph.edges()), pivot, memo)
    logger.debug(f"Tutte polynomial of m={graph.size} used {len(memo)} memoized minors")
    return BivariatePoly.from_terms(terms)


def subgraph_component_polynomial(graph: Graph, force: bool = False) -> BivariatePoly:
    """Q(G;x,y): coefficient (i, j) counts vertex sets of size i inducing j components."""
    check_comparison_order(graph, force)
    terms: Counter = Counter()
    for subset in range(1 << graph.order):
        terms[(subset.bit_count(), component_count(graph.adjacency, subset))] += 1
    return BivariatePoly.from_terms(dict(terms))
