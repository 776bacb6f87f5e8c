"""
Tests for the census catalog, its JSON-lines persistence and the collision summary.
"""

import io
import json

import pytest

from allipoly.core.errors import CatalogError, GraphError, GuardExceededError
from allipoly.models.alliance import AlliancePolynomial
from allipoly.models.census import CatalogEntry, CollisionGroup
from allipoly.services.census.catalog import (
    build_catalog,
    catalog_entry,
    check_census_order,
    load_catalog,
    load_catalog_path,
    save_catalog,
    save_catalog_path,
)
from allipoly.services.census.collisions import find_collisions, summarize_census, verify_characterizations


@pytest.fixture(scope="module")
def catalog_4():
    """Catalog of every graph on at most four vertices."""
    return build_catalog(4)


class TestCatalog:
    """Test cases for catalog construction."""

    def test_counts_per_order(self, catalog_4) -> None:
        """Test 1 + 2 + 4 + 11 classes."""
        assert len(catalog_4) == 18
        orders = [entry.order for entry in catalog_4]
        assert [orders.count(n) for n in range(1, 5)] == [1, 2, 4, 11]
        assert orders == sorted(orders)
        assert catalog_4[0].canonical == "@"

    def test_entry_fields(self) -> None:
        """Test the entry of P_2."""
        entry = catalog_entry("A_")
        assert entry.order == 2
        assert entry.polynomial.to_exponents() == {1: 2, 3: 1}
        assert entry.degree_sequence == [1, 1]
        assert entry.connected

    def test_parallel_build_agrees(self, catalog_4) -> None:
        """Test that worker processes build the same catalog."""
        assert build_catalog(4, threads=2) == catalog_4

    def test_guards(self) -> None:
        """Test the census ceiling with and without override."""
        check_census_order(7)
        check_census_order(8, force=True)
        with pytest.raises(GuardExceededError):
            check_census_order(8)
        with pytest.raises(GuardExceededError):
            check_census_order(9, force=True)
        with pytest.raises(GraphError):
            check_census_order(0)

    def test_entry_validation(self) -> None:
        """Test degree sequence checks on entries."""
        poly = AlliancePolynomial.from_exponents(2, {1: 2, 3: 1})
        with pytest.raises(ValueError):
            CatalogEntry(canonical="A_", order=2, polynomial=poly, degree_sequence=[1], connected=True)
        with pytest.raises(ValueError):
            CatalogEntry(canonical="B?", order=3, polynomial=poly, degree_sequence=[0, 0, 0], connected=False)


class TestPersistence:
    """Test cases for JSON-lines persistence."""

    def test_line_format(self, catalog_4) -> None:
        """Test one compact JSON object per line."""
        sink = io.StringIO()
        assert save_catalog(catalog_4, sink) == 18
        lines = sink.getvalue().splitlines()
        assert len(lines) == 18
        p2_line = next(line for line in lines if json.loads(line)["g6"] == "A_")
        assert '"poly":{"-1":2,"1":1}' in p2_line
        assert json.loads(p2_line) == {"g6": "A_", "n": 2, "poly": {"-1": 2, "1": 1}, "degseq": [1, 1], "connected": True}

    def test_file_reload(self, catalog_4, tmp_path) -> None:
        """Test saving to and loading from a file."""
        path = tmp_path / "catalog.jsonl"
        save_catalog_path(catalog_4, path)
        assert load_catalog_path(path) == catalog_4

    @pytest.mark.parametrize("bad_line", [
        "{not json",
        '{"g6": "A_", "n": 2}',
        '{"g6": "A_", "n": 3, "poly": {"0": 1}, "degseq": [1, 1, 0], "connected": false}',
        '{"g6": "A!", "n": 2, "poly": {"-1": 2}, "degseq": [0, 0], "connected": false}',
    ])
    def test_malformed_line_reports_number(self, bad_line: str) -> None:
        """Test that load errors name the offending line."""
        good = json.dumps(catalog_entry("@").to_json_dict())
        source = io.StringIO(good + "\n\n" + bad_line + "\n")
        with pytest.raises(CatalogError) as exc_info:
            load_catalog(source)
        assert exc_info.value.line_number == 3

    def test_io_errors(self, tmp_path) -> None:
        """Test unreadable and unwritable paths."""
        with pytest.raises(CatalogError):
            load_catalog_path(tmp_path / "missing.jsonl")
        with pytest.raises(CatalogError):
            save_catalog_path([], tmp_path / "no_such_dir" / "catalog.jsonl")


class TestCollisions:
    """Test cases for collision groups and characterizations."""

    def test_groups_share_polynomial(self, catalog_4) -> None:
        """Test that each group's members share the group polynomial and order."""
        by_canonical = {entry.canonical: entry for entry in catalog_4}
        for group in find_collisions(catalog_4):
            assert len(group.members) >= 2
            for member in group.members:
                assert by_canonical[member].polynomial == group.polynomial

    def test_synthetic_collision(self) -> None:
        """Test grouping of two entries with the same polynomial."""
        poly = AlliancePolynomial.from_exponents(3, {3: 1})
        entries = [
            CatalogEntry(canonical=form, order=3, polynomial=poly, degree_sequence=[0, 0, 0], connected=False)
            for form in ("B?", "BW")
        ]
        groups = find_collisions(entries)
        assert len(groups) == 1
        assert groups[0].members == ["B?", "BW"]
        with pytest.raises(ValueError):
            CollisionGroup(polynomial=poly, members=["B?"])

    def test_families_are_characterized(self, catalog_4) -> None:
        """Test that family members have polynomials no other graph attains."""
        report = verify_characterizations(catalog_4)
        assert report.max_n == 4
        assert report.all_passed, [v.render_text() for v in report.verdicts if not v.passed]
        families = {(v.family, v.order) for v in report.verdicts}
        assert ("cycle", 3) in families and ("cycle", 2) not in families
        assert ("empty", 4) in families

    def test_characterization_catches_match_of_another_order(self, catalog_4) -> None:
        """Test that a five-vertex entry sharing the exponents of A(P_4) breaks the path verdict.

        Collision groups stay within one order, so the same entry forms no group.
        """
        p4_exponents = {2: 2, 3: 2, 4: 5, 5: 1}
        impostor = CatalogEntry(
            canonical="D??",
            order=5,
            polynomial=AlliancePolynomial.from_exponents(5, p4_exponents),
            degree_sequence=[0, 0, 0, 0, 0],
            connected=False,
        )
        catalog = [*catalog_4, impostor]

        verdicts = {(v.family, v.order): v for v in verify_characterizations(catalog).verdicts}
        assert not verdicts[("path", 4)].passed
        assert verdicts[("path", 4)].others == ["D??"]
        assert verdicts[("path", 3)].passed
        assert verdicts[("star", 4)].passed

        assert find_collisions(catalog) == find_collisions(catalog_4)

    def test_summary(self, catalog_4) -> None:
        """Test per-order counts and the JSON form."""
        summary = summarize_census(catalog_4)
        assert summary.class_counts == {1: 1, 2: 2, 3: 4, 4: 11}
        assert summary.entries == 18
        data = summary.to_json_dict()
        assert data["class_counts"] == {"1": 1, "2": 2, "3": 4, "4": 11}
        assert data["all_characterizations_passed"] is True
