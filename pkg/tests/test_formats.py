"""
Tests for edge-list and graph6 text formats.
"""

import networkx as nx
import pytest

from allipoly.core.errors import GraphFormatError
from allipoly.models.graph import Graph
from allipoly.services.graphs.builders import complete, complete_bipartite, cycle, empty, path, star
from allipoly.services.graphs.formats import (
    from_edge_list_text,
    from_graph6,
    parse_graph_text,
    to_edge_list_text,
    to_graph6,
)


def _networkx_graph6(graph: Graph) -> str:
    g = nx.Graph()
    g.add_nodes_from(range(graph.order))
    g.add_edges_from(graph.edges())
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


class TestEdgeList:
    """Test cases for edge-list parsing."""

    def test_parse_with_comments_and_blank_lines(self) -> None:
        """Test that comments and blank lines are skipped."""
        text = "# a path\n\n3\n0 1\n# middle\n1 2\n"
        assert from_edge_list_text(text) == path(3)

    def test_isolated_vertices_from_order_line(self) -> None:
        """Test that the order line alone gives an edgeless graph."""
        assert from_edge_list_text("4\n") == empty(4)

    def test_write_then_parse(self) -> None:
        """Test that rendered text parses back to the same graph."""
        g = complete_bipartite(2, 3)
        assert to_edge_list_text(g).splitlines()[0] == "5"
        assert from_edge_list_text(to_edge_list_text(g)) == g

    @pytest.mark.parametrize("text,line", [
        ("3\n0 3\n", 2),
        ("3\n0 1 2\n", 2),
        ("3\n0 x\n", 2),
        ("3\n1 1\n", 2),
        ("3 4\n", 1),
        ("# header\n0\n", 2),
    ])
    def test_errors_carry_line_numbers(self, text: str, line: int) -> None:
        """Test that each malformed line is reported with its number."""
        with pytest.raises(GraphFormatError) as exc_info:
            from_edge_list_text(text)
        assert exc_info.value.line_number == line
        assert str(exc_info.value).startswith(f"line {line}: ")

    def test_missing_order_line(self) -> None:
        """Test empty and comment-only input."""
        with pytest.raises(GraphFormatError, match="missing order line"):
            from_edge_list_text("")
        with pytest.raises(GraphFormatError, match="missing order line"):
            from_edge_list_text("# nothing\n")


class TestGraph6:
    """Test cases for graph6 encoding."""

    def test_known_strings(self) -> None:
        """Test small graphs against their standard graph6 strings."""
        assert to_graph6(empty(1)) == "@"
        assert to_graph6(path(2)) == "A_"
        assert to_graph6(complete(4)) == "C~"
        assert to_graph6(cycle(5)) == "Dhc"

    @pytest.mark.parametrize("graph", [path(7), cycle(8), star(6), complete(9), complete_bipartite(3, 4), empty(5)])
    def test_matches_networkx(self, graph: Graph) -> None:
        """Test encoding against networkx."""
        assert to_graph6(graph) == _networkx_graph6(graph)

    def test_decode(self) -> None:
        """Test decoding with and without the optional header."""
        assert from_graph6("Dhc") == cycle(5)
        assert from_graph6(">>graph6<<C~\n") == complete(4)

    @pytest.mark.parametrize("text", ["", "C", "C~~", "C\x10", ">>graph6<<"])
    def test_decode_errors(self, text: str) -> None:
        """Test truncated, over-long and invalid strings."""
        with pytest.raises(GraphFormatError):
            from_graph6(text)

    def test_parse_graph_text(self) -> None:
        """Test format dispatch."""
        assert parse_graph_text("A_\n", "graph6") == path(2)
        assert parse_graph_text("2\n0 1\n", "edgelist") == path(2)
        with pytest.raises(GraphFormatError):
            parse_graph_text("A_\nA_\n", "graph6")
        with pytest.raises(GraphFormatError):
            parse_graph_text("2\n", "dot")
