"""
Structural invariant report for a (graph, alliance polynomial) pair.

Every check recomputes what it needs from the graph and compares it with the
polynomial, so a polynomial supplied by the caller (instead of computed here)
is validated against the graph.
"""

import logging
from random import Random
from typing import Any, Dict, List, Optional, Tuple

from allipoly.models.alliance import AlliancePolynomial, InvariantCheck, InvariantReport
from allipoly.models.graph import Graph, VertexSet
from allipoly.models.polynomial import IntPolynomial
from allipoly.services.alliance.analysis import (
    cut_set_count,
    defensive_alliance_count,
    distinct_degree_terms_present,
    max_alliance_index,
    parity_symmetric,
)
from allipoly.services.alliance.composition import join_polynomial, union_compose
from allipoly.services.alliance.engine import (
    alliance_polynomial,
    exact_alliance_index,
    is_defensive_k_alliance,
    size_counts,
    subset_index,
)
from allipoly.services.graphs.bitsets import component_masks, is_connected_subset
from allipoly.services.graphs.builders import disjoint_union, path, remove_edge, remove_vertex

logger = logging.getLogger(__name__)

CHECK_NAMES = (
    "min_exponent",
    "second_exponent",
    "degree_bounds",
    "regular_components",
    "parity_symmetry",
    "connected_count",
    "defensive_counts",
    "exact_index",
    "disjoint_union",
    "join_value_at_one",
    "join_degree",
    "proper_subgraph",
    "determinism",
)

EXACT_INDEX_SAMPLES = 1000
DETERMINISM_PARTITIONS = (1, 2, 8)


class _Context:
    """Shared inputs of the checks."""

    def __init__(self, graph: Graph, polynomial: AlliancePolynomial, partner: Graph, force: bool) -> None:
        self.graph = graph
        self.p = polynomial
        self.partner = partner
        self.force = force
        self.n = graph.order
        self.degrees = [row.bit_count() for row in graph.adjacency]
        self.max_degree = max(self.degrees)
        self.min_degree = min(self.degrees)

    def compute(self, graph: Graph, threads: int = 1) -> AlliancePolynomial:
        return alliance_polynomial(graph, force=self.force, threads=threads, processes=False)


def _check(name: str, passed: bool, **witness: Any) -> InvariantCheck:
    return InvariantCheck(name=name, passed=bool(passed), witness=witness)


def _min_exponent(ctx: _Context) -> InvariantCheck:
    expected = ctx.n - ctx.max_degree
    top = ctx.degrees.count(ctx.max_degree)
    lowest = ctx.p.coefficient(-ctx.max_degree)
    return _check(
        "min_exponent",
        ctx.p.min_degree == expected and lowest == top,
        min_exponent=ctx.p.min_degree,
        expected=expected,
        lowest_coefficient=lowest,
        max_degree_vertices=top,
    )


def _second_exponent(ctx: _Context) -> InvariantCheck:
    if ctx.max_degree < 1:
        return _check("second_exponent", True, skipped="edgeless graph")
    count = ctx.degrees.count(ctx.max_degree - 1)
    coefficient = ctx.p.coefficient(-ctx.max_degree + 1)
    return _check(
        "second_exponent",
        coefficient == count,
        coefficient=coefficient,
        vertices_of_degree=count,
    )


def _degree_bounds(ctx: _Context) -> InvariantCheck:
    low, high = ctx.n + ctx.min_degree, ctx.n + ctx.max_degree
    present = ctx.p.coefficient(ctx.min_degree) > 0
    within = low <= ctx.p.degree <= high
    degree_terms = distinct_degree_terms_present(ctx.graph, ctx.p)
    return _check(
        "degree_bounds",
        present and within and degree_terms,
        degree=ctx.p.degree,
        lower=low,
        upper=high,
        min_degree_term=present,
        degree_terms_present=degree_terms,
    )


def _regular_components(ctx: _Context) -> InvariantCheck:
    adjacency = ctx.graph.adjacency
    parts = component_masks(adjacency, ctx.graph.full_mask)
    regular = sum(
        1 for mask in parts
        if all(ctx.degrees[v] == ctx.max_degree for v in range(ctx.n) if mask >> v & 1)
    )
    coefficient = ctx.p.coefficient(ctx.max_degree)
    passed = coefficient == regular
    if len(parts) == 1:
        is_regular = ctx.min_degree == ctx.max_degree
        passed = passed and ((coefficient == 1) == is_regular)
    return _check(
        "regular_components",
        passed,
        coefficient=coefficient,
        regular_components=regular,
        components=len(parts),
    )


def _parity_symmetry(ctx: _Context) -> InvariantCheck:
    same_parity = len({d % 2 for d in ctx.degrees}) == 1
    symmetric = parity_symmetric(ctx.p)
    return _check(
        "parity_symmetry",
        symmetric == same_parity,
        parity_symmetric=symmetric,
        degrees_same_parity=same_parity,
    )


def _connected_count(ctx: _Context) -> InvariantCheck:
    counts = size_counts(ctx.graph, force=ctx.force)
    total = ctx.p.total()
    passed = (
        total < 1 << ctx.n
        and total == counts.total_connected()
        and cut_set_count(ctx.p) == sum(counts.cut_sets)
    )
    return _check(
        "connected_count",
        passed,
        value_at_one=total,
        enumerated=counts.total_connected(),
        cut_sets=sum(counts.cut_sets),
    )


def _satisfies(adjacency: Tuple[int, ...], full: int, subset: int, k: int) -> bool:
    outside = full & ~subset
    bits = subset
    while bits:
        low = bits & -bits
        row = adjacency[low.bit_length() - 1]
        if (row & subset).bit_count() < (row & outside).bit_count() + k:
            return False
        bits ^= low
    return True


def _defensive_counts(ctx: _Context) -> InvariantCheck:
    adjacency = ctx.graph.adjacency
    full = ctx.graph.full_mask
    ks = list(range(-ctx.max_degree, ctx.max_degree + 1))
    direct = {k: 0 for k in ks}
    for subset in range(1, 1 << ctx.n):
        if not is_connected_subset(adjacency, subset):
            continue
        for k in ks:
            if not _satisfies(adjacency, full, subset, k):
                break
            direct[k] += 1

    mismatches = {k: (defensive_alliance_count(ctx.p, k), direct[k]) for k in ks if defensive_alliance_count(ctx.p, k) != direct[k]}
    beyond = defensive_alliance_count(ctx.p, max_alliance_index(ctx.p) + 1)
    return _check(
        "defensive_counts",
        not mismatches and beyond == 0,
        mismatches=mismatches,
        max_index=max_alliance_index(ctx.p),
        beyond_max_index=beyond,
    )


def _exact_index(ctx: _Context) -> InvariantCheck:
    total = (1 << ctx.n) - 1
    if total <= EXACT_INDEX_SAMPLES:
        subsets = list(range(1, total + 1))
    else:
        rng = Random(ctx.n)
        subsets = [rng.randint(1, total) for _ in range(EXACT_INDEX_SAMPLES)]

    failures: List[int] = []
    for bits in subsets:
        subset = VertexSet(bits=bits, universe=ctx.n)
        k = exact_alliance_index(ctx.graph, subset)
        if not is_defensive_k_alliance(ctx.graph, subset, k) or is_defensive_k_alliance(ctx.graph, subset, k + 1):
            failures.append(bits)
    return _check("exact_index", not failures, sampled=len(subsets), failing_subsets=failures[:5])


def _disjoint_union(ctx: _Context) -> InvariantCheck:
    direct = ctx.compute(disjoint_union(ctx.graph, ctx.partner))
    composed = union_compose([ctx.p, ctx.compute(ctx.partner)])
    return _check(
        "disjoint_union",
        direct == composed,
        direct=direct.render_text(),
        composed=composed.render_text(),
    )


def _join_residual(ctx: _Context) -> IntPolynomial:
    decomposition = join_polynomial(
        ctx.graph, ctx.partner, force=ctx.force, threads=1, processes=False, first=ctx.p,
    )
    return decomposition.residual


def _join_value_at_one(ctx: _Context, residual: IntPolynomial) -> InvariantCheck:
    expected = ((1 << ctx.n) - 1) * ((1 << ctx.partner.order) - 1)
    value = residual.evaluate(1)
    nonnegative = all(c >= 0 for c in residual.coefficients)
    return _check(
        "join_value_at_one",
        value == expected and nonnegative,
        residual_at_one=value,
        expected=expected,
        nonnegative=nonnegative,
    )


def _best_index_by_size(graph: Graph) -> Dict[int, int]:
    """Largest min over v in R of (2·δ_R(v) - δ(v)) among vertex sets R of each size."""
    degrees = [row.bit_count() for row in graph.adjacency]
    best: Dict[int, int] = {}
    for subset in range(1, 1 << graph.order):
        size = subset.bit_count()
        value = subset_index(graph.adjacency, degrees, subset)
        if size not in best or value > best[size]:
            best[size] = value
    return best


def _join_degree(ctx: _Context, residual: IntPolynomial) -> InvariantCheck:
    # In the join, v in R1 gains r2 neighbors inside and n2 - r2 outside
    n1, n2 = ctx.n, ctx.partner.order
    left = _best_index_by_size(ctx.graph)
    right = _best_index_by_size(ctx.partner)
    best = max(
        min(a + 2 * r2 - n2, b + 2 * r1 - n1)
        for r1, a in left.items()
        for r2, b in right.items()
    )
    expected = n1 + n2 + best
    union_degree = ctx.compute(disjoint_union(ctx.graph, ctx.partner)).degree
    return _check(
        "join_degree",
        residual.degree == expected,
        residual_degree=residual.degree,
        expected=expected,
        union_degree=union_degree,
    )


def _proper_subgraph(ctx: _Context) -> InvariantCheck:
    for u, v in ctx.graph.edges():
        smaller = ctx.compute(remove_edge(ctx.graph, u, v))
        if smaller == ctx.p or smaller.total() >= ctx.p.total():
            return _check("proper_subgraph", False, removed_edge=[u, v], value_at_one=smaller.total())
    if ctx.n >= 2:
        for v in range(ctx.n):
            smaller = ctx.compute(remove_vertex(ctx.graph, v))
            if smaller.as_int_polynomial() == ctx.p.as_int_polynomial() or smaller.total() >= ctx.p.total():
                return _check("proper_subgraph", False, removed_vertex=v, value_at_one=smaller.total())
    return _check("proper_subgraph", True, edges_removed=ctx.graph.size, vertices_removed=ctx.n if ctx.n >= 2 else 0)


def _determinism(ctx: _Context) -> InvariantCheck:
    differing = [
        parts for parts in DETERMINISM_PARTITIONS
        if ctx.compute(ctx.graph, threads=parts) != ctx.p
    ]
    return _check("determinism", not differing, partitions=list(DETERMINISM_PARTITIONS), differing=differing)


def invariant_report(
    graph: Graph,
    partner: Optional[Graph] = None,
    polynomial: Optional[AlliancePolynomial] = None,
    force: bool = False,
    threads: Optional[int] = None,
) -> InvariantReport:
    """Evaluate every structural check on a graph and its alliance polynomial.

    Args:
        graph: Graph to check
        partner: Second graph for the union and join checks (default P_2)
        polynomial: Polynomial to validate; computed from the graph when omitted
        force: Skip the brute-force order guard
        threads: Partitions for the initial computation

    Returns:
        InvariantReport with one check per name in CHECK_NAMES
    """
    if polynomial is None:
        polynomial = alliance_polynomial(graph, force=force, threads=threads)
    if partner is None:
        partner = path(2)

    ctx = _Context(graph, polynomial, partner, force)
    residual = _join_residual(ctx)
    checks = [
        _min_exponent(ctx),
        _second_exponent(ctx),
        _degree_bounds(ctx),
        _regular_components(ctx),
        _parity_symmetry(ctx),
        _connected_count(ctx),
        _defensive_counts(ctx),
        _exact_index(ctx),
        _disjoint_union(ctx),
        _join_value_at_one(ctx, residual),
        _join_degree(ctx, residual),
        _proper_subgraph(ctx),
        _determinism(ctx),
    ]

    report = InvariantReport(order=graph.order, polynomial=polynomial, checks=checks)
    if report.all_passed:
        logger.info(f"All {len(checks)} checks passed for n={graph.order}")
    else:
        logger.info(f"{len(report.failed())} of {len(checks)} checks failed for n={graph.order}")
    return report
