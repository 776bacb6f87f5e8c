"""
Polynomial comparison between graphs and the built-in distinguishing suite.

Each suite item names a pair of non-isomorphic graphs that share a classical
polynomial while their alliance polynomials differ. Item 5 concerns the
bivariate chromatic polynomial, which is not computed; only its alliance
side is checked.
"""

import logging
from typing import Callable, Dict, List, Sequence, Tuple

from allipoly.core.errors import PolynomialError
from allipoly.models.comparison import DistinguishingItem, DistinguishingReport, PolynomialComparison
from allipoly.models.graph import Graph
from allipoly.services.alliance.analysis import parity_symmetric
from allipoly.services.alliance.engine import alliance_polynomial
from allipoly.services.comparison.algebraic import (
    characteristic_polynomial,
    subgraph_component_polynomial,
    tutte_polynomial,
)
from allipoly.services.comparison.counting import (
    domination_counts,
    independence_counts,
    matching_counts,
)
from allipoly.services.graphs.builders import (
    cartesian_product,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    join,
    path,
    star,
    strong_product,
)
from allipoly.services.graphs.fixtures import fixture_graph

logger = logging.getLogger(__name__)

# name -> (compute(graph, force), render); results compare with ==
POLYNOMIALS: Dict[str, Tuple[Callable[[Graph, bool], object], Callable[[object], str]]] = {
    "alliance": (lambda g, force: alliance_polynomial(g, force=force, processes=False), lambda p: p.render_text()),
    "matching": (matching_counts, lambda p: p.render_text()),
    "independence": (independence_counts, lambda p: p.render_text()),
    "domination": (domination_counts, lambda p: p.render_text()),
    "characteristic": (characteristic_polynomial, lambda p: p.render_text("λ")),
    "tutte": (tutte_polynomial, lambda p: p.render_text()),
    "subgraph-component": (subgraph_component_polynomial, lambda p: p.render_text()),
}


def compare(name: str, g1: Graph, g2: Graph, force: bool = False) -> PolynomialComparison:
    """Compute one named polynomial on both graphs and compare them.

    force is handed to the polynomial so its order or edge guard can be overridden.

    Raises:
        PolynomialError: If the polynomial name is unknown
    """
    if name not in POLYNOMIALS:
        raise PolynomialError(f"Unknown polynomial {name!r}; expected one of {', '.join(POLYNOMIALS)}")
    compute, render = POLYNOMIALS[name]
    first, second = compute(g1, force), compute(g2, force)
    return PolynomialComparison(
        polynomial=name,
        first=render(first),
        second=render(second),
        equal=first == second,
    )


def compare_graphs(
    g1: Graph, g2: Graph, names: Sequence[str], force: bool = False,
) -> List[PolynomialComparison]:
    """Compare two graphs under each named polynomial, in the given order."""
    for name in names:
        if name not in POLYNOMIALS:
            raise PolynomialError(f"Unknown polynomial {name!r}; expected one of {', '.join(POLYNOMIALS)}")
    return [compare(name, g1, g2, force=force) for name in names]


def _item(number: int, polynomial: str, fixtures: List[str], g1: Graph, g2: Graph) -> DistinguishingItem:
    return DistinguishingItem(
        item=number,
        polynomial=polynomial,
        fixtures=fixtures,
        classical=compare(polynomial, g1, g2),
        alliance=compare("alliance", g1, g2),
    )


def distinguishing_suite() -> DistinguishingReport:
    """Reproduce every distinguishing pair.

    Returns:
        DistinguishingReport with items 1 through 7
    """
    items: List[DistinguishingItem] = []

    items.append(_item(1, "characteristic", ["gamma_3", "gamma_4"], fixture_graph("gamma_3"), fixture_graph("gamma_4")))
    items.append(_item(2, "matching", ["P_5", "P_2 ∪ C_3"], path(5), disjoint_union(path(2), cycle(3))))
    items.append(_item(
        3, "independence", ["P_2 ⊠ P_3", "E_2 ⊎ P_4"],
        strong_product(path(2), path(3)), join(empty(2), path(4)),
    ))
    items.append(_item(
        4, "domination", ["K_3,3", "P_2 □ C_3"],
        complete_bipartite(3, 3), cartesian_product(path(2), cycle(3)),
    ))

    gamma_5, gamma_6 = fixture_graph("gamma_5"), fixture_graph("gamma_6")
    p5 = alliance_polynomial(gamma_5, processes=False)
    p6 = alliance_polynomial(gamma_6, processes=False)
    items.append(DistinguishingItem(
        item=5,
        polynomial="bivariate-chromatic",
        fixtures=["gamma_5", "gamma_6"],
        classical=None,
        alliance=PolynomialComparison(
            polynomial="alliance", first=p5.render_text(), second=p6.render_text(), equal=p5 == p6,
        ),
        skipped="bivariate chromatic polynomial is not computed",
        details={
            "first_parity_symmetric": parity_symmetric(p5),
            "second_parity_symmetric": parity_symmetric(p6),
        },
    ))

    tutte_item = _item(6, "tutte", ["P_4", "K_1,3"], path(4), star(4))
    tutte_item.details["pivot_independent"] = all(
        tutte_polynomial(g, pivot="lowest") == tutte_polynomial(g, pivot="highest")
        for g in (path(4), star(4), cycle(3), complete_bipartite(2, 3))
    )
    items.append(tutte_item)

    items.append(_item(
        7, "subgraph-component", ["gamma_1", "gamma_2"],
        fixture_graph("gamma_1"), fixture_graph("gamma_2"),
    ))

    report = DistinguishingReport(items=items)
    logger.info(f"Distinguishing suite: {sum(item.verified for item in items)} of {len(items)} items verified")
    return report
