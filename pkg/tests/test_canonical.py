"""
Tests for canonical forms and isomorphism-free enumeration.

networkx serves as the oracle: its graph atlas lists every graph on up to
seven vertices once, and its VF2 matcher decides isomorphism independently.
"""

import random
from collections import Counter
from typing import List

import networkx as nx
import pytest

from allipoly.core.config import guard_config
from allipoly.core.errors import GraphError, GuardExceededError
from allipoly.models.graph import Graph
from allipoly.services.graphs.builders import complete, cycle, new_graph, path, relabel, star
from allipoly.services.graphs.canonical import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    enumerate_labeled,
    enumerate_nonisomorphic,
    nonisomorphic_levels,
)
from allipoly.services.graphs.formats import to_graph6


def _to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.order))
    g.add_edges_from(graph.edges())
    return g


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _shuffled(rng: random.Random, graph: Graph) -> Graph:
    permutation: List[int] = list(range(graph.order))
    rng.shuffle(permutation)
    return relabel(graph, permutation)


class TestCanonicalForm:
    """Test cases for canonical labeling."""

    def setup_method(self) -> None:
        """Set up a seeded generator for each test."""
        self.rng = random.Random(2024)

    def test_path_on_three_vertices(self) -> None:
        """Test the smallest-bit-string labeling places the two leaves first."""
        assert canonical_form(path(3)) == b"BW"
        assert canonical_form(star(3)) == b"BW"

    def test_invariant_under_relabeling(self) -> None:
        """Test 100 random (graph, permutation) pairs on up to eight vertices."""
        for _ in range(100):
            g = _random_graph(self.rng, self.rng.randint(1, 8), self.rng.choice([0.3, 0.5, 0.7]))
            assert canonical_form(_shuffled(self.rng, g)) == canonical_form(g)

    def test_canonical_graph_is_isomorphic_copy(self) -> None:
        """Test that the canonical relabeling is a fixed point."""
        g = _random_graph(self.rng, 6)
        canon = canonical_graph(g)
        assert canon.size == g.size
        assert canonical_form(canon) == canonical_form(g)
        assert to_graph6(canon).encode("ascii") == canonical_form(g)

    def test_agrees_with_networkx_isomorphism(self) -> None:
        """Test are_isomorphic against VF2 on random pairs with equal edge counts."""
        checked = 0
        while checked < 40:
            n = self.rng.randint(4, 7)
            g1, g2 = _random_graph(self.rng, n), _random_graph(self.rng, n)
            if g1.size != g2.size:
                continue
            assert are_isomorphic(g1, g2) == nx.is_isomorphic(_to_networkx(g1), _to_networkx(g2))
            checked += 1

    def test_different_orders_are_not_isomorphic(self) -> None:
        """Test the order short-cut."""
        assert not are_isomorphic(path(3), path(4))
        assert not are_isomorphic(cycle(4), path(4))

    def test_guard(self) -> None:
        """Test the canonical guard and its override."""
        g = complete(guard_config.canonical_max_order + 1)
        with pytest.raises(GuardExceededError):
            canonical_form(g)
        assert canonical_form(g, force=True) == to_graph6(g).encode("ascii")


class TestEnumeration:
    """Test cases for isomorphism-free enumeration."""

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_class_counts(self, n: int, expected: int) -> None:
        """Test the number of isomorphism classes per order."""
        assert sum(1 for _ in enumerate_nonisomorphic(n)) == expected

    def test_matches_graph_atlas(self) -> None:
        """Test augmentation against the networkx atlas up to six vertices."""
        atlas_counts = Counter(g.number_of_nodes() for g in nx.graph_atlas_g())
        for n, level in enumerate(nonisomorphic_levels(6), start=1):
            assert len(level) == atlas_counts[n]

    def test_atlas_canonical_forms_are_distinct(self) -> None:
        """Test that non-isomorphic atlas graphs get distinct forms covering the enumeration."""
        forms = set()
        for g in nx.graph_atlas_g():
            n = g.number_of_nodes()
            if not 1 <= n <= 5:
                continue
            forms.add(canonical_form(new_graph(n, g.edges())))
        enumerated = {to_graph6(g).encode("ascii") for n in range(1, 6) for g in enumerate_nonisomorphic(n)}
        assert forms == enumerated

    def test_labeled_oracle_agrees(self) -> None:
        """Test both enumeration methods on four vertices."""
        assert list(enumerate_nonisomorphic(4, method="labeled")) == list(enumerate_nonisomorphic(4))
        assert sum(1 for _ in enumerate_labeled(4)) == 64

    def test_parallel_augmentation_agrees(self) -> None:
        """Test that worker processes give the same representatives."""
        assert list(enumerate_nonisomorphic(5, threads=2)) == list(enumerate_nonisomorphic(5))

    def test_streams_lazily(self) -> None:
        """Test that representatives arrive one at a time in canonical-form order."""
        stream = enumerate_nonisomorphic(4)
        first = next(stream)
        assert first.order == 4
        rest = list(stream)
        assert len(rest) == 10
        forms = [canonical_form(g) for g in [first, *rest]]
        assert forms == sorted(forms)

    def test_bad_arguments(self) -> None:
        """Test order bounds, guard and method name."""
        with pytest.raises(GraphError):
            enumerate_nonisomorphic(0)
        with pytest.raises(GuardExceededError):
            enumerate_nonisomorphic(guard_config.enumeration_max_order + 1)
        with pytest.raises(GraphError):
            enumerate_nonisomorphic(3, method="orderly")
