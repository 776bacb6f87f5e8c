"""
Tests for the classical comparison polynomials and the distinguishing suite.
"""

import random
from itertools import combinations
from typing import List

import networkx as nx
import pytest
from pydantic import ValidationError
from sympy import Matrix

from allipoly.core.config import guard_config
from allipoly.core.errors import GraphError, GuardExceededError, PolynomialError
from allipoly.models.comparison import CountVector
from allipoly.models.graph import Graph
from allipoly.services.alliance.engine import alliance_polynomial
from allipoly.services.comparison.algebraic import (
    characteristic_polynomial,
    subgraph_component_polynomial,
    tutte_polynomial,
)
from allipoly.services.comparison.counting import domination_counts, independence_counts, matching_counts
from allipoly.services.comparison.suite import POLYNOMIALS, compare, compare_graphs, distinguishing_suite
from allipoly.services.graphs.builders import (
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    join,
    new_graph,
    path,
    star,
    strong_product,
)
from allipoly.services.graphs.fixtures import (
    FIXTURE_DEGREE_SEQUENCES,
    cospectral_pair,
    even_degree_pair,
    fixture_graph,
    tree_pair,
)
from allipoly.services.graphs.queries import degree_sequence


class TestCountVectors:
    """Test cases for matching, independence and domination counts."""

    def test_matching(self) -> None:
        """Test P_5 and P_2 ∪ C_3 share matching counts."""
        assert matching_counts(path(5)).counts == [1, 4, 3]
        assert matching_counts(disjoint_union(path(2), cycle(3))).counts == [1, 4, 3]
        assert matching_counts(complete(4)).counts == [1, 6, 3]

    def test_independence(self) -> None:
        """Test independent set counts, empty set included."""
        assert independence_counts(cycle(4)).counts == [1, 4, 2]
        assert independence_counts(strong_product(path(2), path(3))).counts == [1, 6, 4]
        assert independence_counts(join(empty(2), path(4))).counts == [1, 6, 4]

    def test_domination(self) -> None:
        """Test dominating set counts."""
        assert domination_counts(complete(3)).counts == [0, 3, 3, 1]
        assert domination_counts(empty(2)).counts == [0, 0, 1]
        expected = [0, 0, 9, 20, 15, 6, 1]
        assert domination_counts(complete_bipartite(3, 3)).counts == expected
        assert domination_counts(cartesian_product(path(2), cycle(3))).counts == expected

    def test_count_vector_model(self) -> None:
        """Test trimming and validation."""
        assert CountVector.from_counts([1, 2, 0, 0]).counts == [1, 2]
        assert CountVector.from_counts([1, 2]).evaluate(3) == 7
        with pytest.raises(ValidationError):
            CountVector(counts=[1, 0])
        with pytest.raises(ValidationError):
            CountVector(counts=[-1])

    def test_guard(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test the comparison order guard."""
        monkeypatch.setattr(guard_config, "comparison_max_order", 4)
        with pytest.raises(GuardExceededError):
            independence_counts(path(5))
        assert independence_counts(path(5), force=True).counts == [1, 5, 6, 1]


class TestAlgebraic:
    """Test cases for characteristic, Tutte and subgraph component polynomials."""

    def test_characteristic(self) -> None:
        """Test det(λI - A) of P_3 and K_3."""
        assert characteristic_polynomial(path(3)).coefficients == (0, -2, 0, 1)
        assert characteristic_polynomial(complete(3)).coefficients == (-2, -3, 0, 1)

    def test_cospectral_fixtures(self) -> None:
        """Test that the two six-vertex fixtures share a spectrum."""
        g3, g4 = cospectral_pair()
        assert characteristic_polynomial(g3) == characteristic_polynomial(g4)

    def test_tutte(self) -> None:
        """Test T(C_3) = x^2 + x + y and trees give x^(n-1)."""
        assert tutte_polynomial(cycle(3)).coefficients == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
        assert tutte_polynomial(cycle(3)).render_text() == "y + x + x^2"
        assert tutte_polynomial(path(4)) == tutte_polynomial(star(4))
        assert tutte_polynomial(path(4)).coefficients == {(3, 0): 1}
        assert tutte_polynomial(empty(3)).coefficients == {(0, 0): 1}

    def test_tutte_spanning_trees(self) -> None:
        """Test T(K_4; 1, 1) = 16 spanning trees and T(C_4; 2, 2) = 2^4."""
        assert tutte_polynomial(complete(4)).evaluate(1, 1) == 16
        assert tutte_polynomial(cycle(4)).evaluate(2, 2) == 16

    def test_tutte_pivot_independent(self) -> None:
        """Test both pivot rules agree."""
        for g in (complete(4), complete_bipartite(2, 3), cycle(5)):
            assert tutte_polynomial(g, pivot="lowest") == tutte_polynomial(g, pivot="highest")
        with pytest.raises(PolynomialError):
            tutte_polynomial(path(3), pivot="random")

    def test_tutte_guard(self) -> None:
        """Test the edge guard."""
        with pytest.raises(GuardExceededError):
            tutte_polynomial(complete(7))

    def test_subgraph_component(self) -> None:
        """Test Q(E_2) = 1 + 2xy + x^2 y^2."""
        q = subgraph_component_polynomial(empty(2))
        assert q.coefficients == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
        assert subgraph_component_polynomial(path(3)).evaluate(1, 1) == 8

    def test_subgraph_component_fixtures(self) -> None:
        """Test that the two ten-vertex trees share Q."""
        g1, g2 = tree_pair()
        assert subgraph_component_polynomial(g1) == subgraph_component_polynomial(g2)


class TestFixtures:
    """Test cases for the fixture graphs."""

    def test_degree_sequences(self) -> None:
        """Test every fixture against its recorded degree sequence."""
        for name, expected in FIXTURE_DEGREE_SEQUENCES.items():
            assert degree_sequence(fixture_graph(name)) == expected

    def test_tree_pair_polynomials(self) -> None:
        """Test the two trees' alliance polynomials, both summing to 94."""
        g1, g2 = tree_pair()
        p1 = alliance_polynomial(g1, processes=False)
        p2 = alliance_polynomial(g2, processes=False)
        assert p1.to_exponents() == {7: 2, 8: 4, 9: 27, 10: 50, 11: 11}
        assert p2.to_exponents() == {7: 2, 8: 4, 9: 30, 10: 47, 11: 11}
        assert p1.total() == p2.total() == 94

    def test_parity_pair(self) -> None:
        """Test that only the all-even fixture has degrees of one parity."""
        g5, g6 = even_degree_pair()
        assert all(d % 2 == 0 for d in degree_sequence(g5))
        assert len({d % 2 for d in degree_sequence(g6)}) == 2

    def test_unknown_fixture(self) -> None:
        """Test an unknown fixture name."""
        with pytest.raises(GraphError):
            fixture_graph("gamma_9")


class TestSuite:
    """Test cases for comparisons and the distinguishing suite."""

    def test_compare_lines(self) -> None:
        """Test P_4 and K_1,3: same Tutte polynomial, different alliance polynomial."""
        results = compare_graphs(path(4), star(4), ["tutte", "alliance"])
        assert [r.render_text() for r in results] == ["tutte: EQUAL", "alliance: UNEQUAL"]

    def test_unknown_polynomial(self) -> None:
        """Test an unknown polynomial name."""
        with pytest.raises(PolynomialError):
            compare_graphs(path(2), path(2), ["alliance", "chromatic"])
        with pytest.raises(PolynomialError):
            compare("chromatic", path(2), path(2))

    def test_every_polynomial_compares(self) -> None:
        """Test each registered polynomial on two isomorphic copies."""
        for name in POLYNOMIALS:
            assert compare(name, path(3), star(3)).equal

    def test_distinguishing_suite(self) -> None:
        """Test that all seven items verify."""
        report = distinguishing_suite()
        assert [item.item for item in report.items] == [1, 2, 3, 4, 5, 6, 7]
        for item in report.items:
            assert item.verified, item.render_text()
        assert report.all_verified
        assert report.items[4].classical is None
        assert report.items[4].details == {"first_parity_symmetric": True, "second_parity_symmetric": False}
        assert report.items[5].details["pivot_independent"] is True
        assert report.to_json_dict()["all_verified"] is True


def _to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.order))
    g.add_edges_from(graph.edges())
    return g


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _counts_by_size(sizes: List[int], length: int) -> List[int]:
    counts = [0] * length
    for size in sizes:
        counts[size] += 1
    return CountVector.from_counts(counts).counts


class TestRandomOracles:
    """Comparison polynomials against independently coded counts on random graphs."""

    def setup_method(self) -> None:
        """Set up a seeded generator for each test."""
        self.rng = random.Random(31)
        self.graphs = [
            _random_graph(self.rng, self.rng.randint(1, 8), self.rng.choice([0.2, 0.4, 0.6]))
            for _ in range(100)
        ]

    def test_matching_counts(self) -> None:
        """Test matchings against pairwise-disjoint edge combinations."""
        for g in self.graphs:
            edges = g.edges()
            sizes = [
                k
                for k in range(g.order // 2 + 1)
                for chosen in combinations(edges, k)
                if len({v for edge in chosen for v in edge}) == 2 * k
            ]
            assert matching_counts(g).counts == _counts_by_size(sizes, g.order // 2 + 1)

    def test_independence_counts(self) -> None:
        """Test independent sets against cliques of the networkx complement."""
        for g in self.graphs:
            cliques = nx.enumerate_all_cliques(nx.complement(_to_networkx(g)))
            sizes = [0] + [len(clique) for clique in cliques]
            assert independence_counts(g).counts == _counts_by_size(sizes, g.order + 1)

    def test_domination_counts(self) -> None:
        """Test dominating sets against networkx.is_dominating_set."""
        for g in self.graphs:
            nx_graph = _to_networkx(g)
            sizes = [
                k
                for k in range(1, g.order + 1)
                for chosen in combinations(range(g.order), k)
                if nx.is_dominating_set(nx_graph, chosen)
            ]
            assert domination_counts(g).counts == _counts_by_size(sizes, g.order + 1)

    def test_subgraph_component_connected_terms(self) -> None:
        """Test that the one-component terms of Q sum to A(G;1)."""
        for g in self.graphs[:40]:
            q = subgraph_component_polynomial(g)
            one_component = sum(c for (_, j), c in q.coefficients.items() if j == 1)
            assert one_component == alliance_polynomial(g, processes=False).total()
            assert q.evaluate(1, 1) == 1 << g.order

    def test_tutte_counts_spanning_trees(self) -> None:
        """Test T(1, 1) against the matrix-tree theorem on 20 connected graphs."""
        checked = 0
        while checked < 20:
            g = _random_graph(self.rng, self.rng.randint(2, 7), 0.5)
            if g.size > guard_config.tutte_max_edges or not nx.is_connected(_to_networkx(g)):
                continue
            laplacian = Matrix([
                [g.adjacency[u].bit_count() if u == v else -int(g.has_edge(u, v)) for v in range(g.order)]
                for u in range(g.order)
            ])
            assert tutte_polynomial(g).evaluate(1, 1) == laplacian[1:, 1:].det()
            checked += 1

    @pytest.mark.parametrize("n", range(3, 11))
    def test_cycle_spectrum_contains_two(self, n: int) -> None:
        """Test that 2 is an eigenvalue of every cycle."""
        assert characteristic_polynomial(cycle(n)).evaluate(2) == 0
