"""
Tests for the structural invariant report.

A correct polynomial must pass every check on a range of graph shapes, and
each check must catch a polynomial that contradicts the graph it describes.
"""

import pytest

from allipoly.models.alliance import AlliancePolynomial, InvariantReport
from allipoly.services.alliance.engine import alliance_polynomial
from allipoly.services.alliance.invariants import CHECK_NAMES, invariant_report
from allipoly.services.graphs.builders import (
    complete,
    complete_bipartite,
    complete_minus_edge,
    cycle,
    disjoint_union,
    empty,
    path,
    star,
)
from allipoly.services.graphs.fixtures import fixture_graph


class TestInvariantReport:
    """Test cases for invariant_report."""

    @pytest.mark.parametrize("graph", [
        path(1),
        path(4),
        cycle(5),
        complete(4),
        empty(3),
        star(5),
        complete_bipartite(2, 3),
        complete_minus_edge(5),
        disjoint_union(cycle(3), path(2)),
        fixture_graph("gamma_6"),
    ])
    def test_correct_polynomial_passes(self, graph) -> None:
        """Test that every check holds for the enumerated polynomial."""
        report = invariant_report(graph)
        assert [check.name for check in report.checks] == list(CHECK_NAMES)
        assert report.all_passed, [check.render_text() for check in report.failed()]

    def test_other_partner(self) -> None:
        """Test the union and join checks with a non-default partner graph."""
        report = invariant_report(path(3), partner=cycle(4))
        assert report.all_passed, [check.render_text() for check in report.failed()]

    def test_join_degree_uses_crossing_sets(self) -> None:
        """Test the join degree check where the union degree is smaller."""
        report = invariant_report(empty(1), partner=empty(1))
        check = report.get("join_degree")
        assert check is not None and check.passed
        assert check.witness["residual_degree"] == 3
        assert check.witness["union_degree"] == 2

    def test_corrupted_coefficient_fails(self) -> None:
        """Test that a miscounted coefficient is caught."""
        corrupted = AlliancePolynomial.from_exponents(4, {2: 2, 3: 2, 4: 4, 5: 1})
        report = invariant_report(path(4), polynomial=corrupted)
        assert not report.all_passed
        failed = {check.name for check in report.failed()}
        assert "connected_count" in failed
        assert "determinism" in failed
        assert "join_value_at_one" in failed

    def test_shifted_minimum_fails(self) -> None:
        """Test that a wrong lowest exponent is caught."""
        p = alliance_polynomial(star(4), processes=False)
        wrong = AlliancePolynomial.from_exponents(4, {2: 1, **{e: c for e, c in p.to_exponents().items() if e != 1}})
        report = invariant_report(star(4), polynomial=wrong)
        check = report.get("min_exponent")
        assert check is not None and not check.passed

    def test_vertex_removal_with_same_terms_fails(self) -> None:
        """Test a polynomial on two vertices whose terms equal A(E_1) = x."""
        lookalike = AlliancePolynomial.from_exponents(2, {1: 1})
        check = invariant_report(empty(2), polynomial=lookalike).get("proper_subgraph")
        assert check is not None and not check.passed
        assert check.witness["removed_vertex"] == 0

    def test_render_text(self) -> None:
        """Test PASS/FAIL lines with witnesses."""
        report = invariant_report(cycle(3))
        line = report.get("regular_components").render_text()
        assert line.startswith("regular_components: PASS (")
        assert "coefficient=1" in line
        assert report.get("no_such_check") is None

    def test_report_rejects_duplicate_names(self) -> None:
        """Test that a report holds each check once."""
        report = invariant_report(path(2))
        with pytest.raises(ValueError):
            InvariantReport(order=2, polynomial=report.polynomial, checks=[report.checks[0], report.checks[0]])
