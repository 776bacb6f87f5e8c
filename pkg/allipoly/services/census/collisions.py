"""
Collision detection and family characterization checks over a catalog.

Polynomials are compared structurally, order included, so two graphs of
different orders never collide.
"""

import logging
from collections import defaultdict
from typing import Callable, Dict, List, Sequence, Tuple

from allipoly.models.census import (
    CatalogEntry,
    CensusSummary,
    CharacterizationReport,
    CharacterizationVerdict,
    CollisionGroup,
)
from allipoly.models.graph import Graph
from allipoly.services.alliance.closed_forms import closed_form_empty
from allipoly.services.graphs.builders import complete, complete_minus_edge, cycle, empty, path, star
from allipoly.services.graphs.canonical import canonical_form

logger = logging.getLogger(__name__)

# family name -> (constructor, smallest order)
CHARACTERIZED_FAMILIES: Dict[str, Tuple[Callable[[int], Graph], int]] = {
    "path": (path, 1),
    "cycle": (cycle, 3),
    "complete": (complete, 1),
    "star": (star, 2),
    "complete-minus-edge": (complete_minus_edge, 2),
    "empty": (empty, 1),
}


def _exponent_key(entry: CatalogEntry) -> tuple:
    return tuple(sorted(entry.polynomial.to_exponents().items()))


def _group_by(catalog: Sequence[CatalogEntry], key: Callable[[CatalogEntry], tuple]) -> Dict[tuple, List[CatalogEntry]]:
    groups: Dict[tuple, List[CatalogEntry]] = defaultdict(list)
    for entry in catalog:
        groups[key(entry)].append(entry)
    return groups


def find_collisions(catalog: Sequence[CatalogEntry]) -> List[CollisionGroup]:
    """Groups of two or more catalog graphs with identical alliance polynomials."""
    collisions = [
        CollisionGroup(
            polynomial=members[0].polynomial,
            members=sorted(entry.canonical for entry in members),
        )
        for members in _group_by(catalog, lambda entry: entry.polynomial.key()).values()
        if len(members) >= 2
    ]
    collisions.sort(key=lambda group: group.polynomial.key())
    logger.info(f"Found {len(collisions)} collision groups among {len(catalog)} catalog entries")
    return collisions


def verify_characterizations(catalog: Sequence[CatalogEntry]) -> CharacterizationReport:
    """Check that each family member in the catalog has a polynomial no other entry attains.

    Empty graphs are additionally checked against n x^n.
    """
    max_n = max((entry.order for entry in catalog), default=0)
    # exponent maps only, so a graph of any order can match
    groups = _group_by(catalog, _exponent_key)
    by_canonical = {entry.canonical: entry for entry in catalog}

    verdicts: List[CharacterizationVerdict] = []
    for family, (build, smallest) in CHARACTERIZED_FAMILIES.items():
        for n in range(smallest, max_n + 1):
            form = canonical_form(build(n)).decode("ascii")
            entry = by_canonical.get(form)
            if entry is None:
                verdicts.append(CharacterizationVerdict(family=family, order=n, canonical=form, passed=False))
                continue

            others = sorted(
                other.canonical for other in groups[_exponent_key(entry)]
                if other.canonical != form
            )
            passed = not others
            if family == "empty":
                passed = passed and entry.polynomial == closed_form_empty(n)
            verdicts.append(CharacterizationVerdict(
                family=family, order=n, canonical=form, passed=passed, others=others,
            ))

    report = CharacterizationReport(max_n=max_n, verdicts=verdicts)
    logger.info(f"Characterizations up to n={max_n}: {sum(v.passed for v in verdicts)} of {len(verdicts)} passed")
    return report


def summarize_census(catalog: Sequence[CatalogEntry]) -> CensusSummary:
    """Per-order class counts, collision groups and characterization verdicts."""
    counts: Dict[int, int] = defaultdict(int)
    for entry in catalog:
        counts[entry.order] += 1
    characterizations = verify_characterizations(catalog)
    return CensusSummary(
        max_n=characterizations.max_n,
        class_counts=dict(counts),
        entries=len(catalog),
        collisions=find_collisions(catalog),
        characterizations=characterizations,
    )
