"""
Census catalog: one entry per isomorphism class with its alliance polynomial.

Catalogs persist as JSON lines, one record per line:
    {"g6": "A_", "n": 2, "poly": {"-1": 2, "1": 1}, "degseq": [1, 1], "connected": true}
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, List, Optional, TextIO, Union
from pydantic import ValidationError

from allipoly.core.config import guard_config, parallel_config
from allipoly.core.errors import CatalogError, GraphError, GuardExceededError
from allipoly.models.census import CatalogEntry
from allipoly.services.alliance.engine import alliance_polynomial
from allipoly.services.graphs.canonical import nonisomorphic_levels
from allipoly.services.graphs.formats import from_graph6, to_graph6
from allipoly.services.graphs.queries import degree_sequence, is_connected

logger = logging.getLogger(__name__)


def check_census_order(max_n: int, force: bool = False) -> None:
    """Validate a census ceiling against the guards.

    Raises:
        GraphError: If max_n < 1
        GuardExceededError: Above the census guard without force, or above the forced ceiling
    """
    if max_n < 1:
        raise GraphError(f"Census needs max_n >= 1, got {max_n}")
    limit = guard_config.census_max_order
    forced_limit = guard_config.census_force_max_order
    if max_n > forced_limit:
        raise GuardExceededError("census order", max_n, forced_limit)
    if max_n > limit:
        if not force:
            raise GuardExceededError("census order", max_n, limit)
        logger.warning(f"Census forced at max_n={max_n} (guard {limit}); expect several minutes of canonicalization")


def catalog_entry(canonical: str) -> CatalogEntry:
    """Build the entry of a canonical graph6 string."""
    graph = from_graph6(canonical)
    return CatalogEntry(
        canonical=canonical,
        order=graph.order,
        polynomial=alliance_polynomial(graph, processes=False),
        degree_sequence=degree_sequence(graph),
        connected=is_connected(graph),
    )


def build_catalog(max_n: int, force: bool = False, threads: Optional[int] = None) -> List[CatalogEntry]:
    """Enumerate every graph of order 1..max_n up to isomorphism with its polynomial.

    Args:
        max_n: Largest order
        force: Allow the forced census ceiling
        threads: Worker processes for enumeration and polynomial computation

    Returns:
        Entries ordered by order, then canonical form
    """
    check_census_order(max_n, force)
    if threads is None:
        threads = parallel_config.default_threads

    entries: List[CatalogEntry] = []
    for level in nonisomorphic_levels(max_n, force=force, threads=threads):
        forms = [to_graph6(g) for g in level]
        if threads > 1 and len(forms) > 1:
            with ProcessPoolExecutor(max_workers=threads) as executor:
                entries.extend(executor.map(catalog_entry, forms, chunksize=max(1, len(forms) // (threads * 4))))
        else:
            entries.extend(catalog_entry(form) for form in forms)
        logger.debug(f"Catalog order {level[0].order}: {len(level)} entries")

    logger.info(f"Built catalog up to n={max_n} with {len(entries)} entries")
    return entries


def save_catalog(entries: Iterable[CatalogEntry], sink: TextIO) -> int:
    """Write entries as JSON lines; returns the number of lines written."""
    count = 0
    for entry in entries:
        sink.write(json.dumps(entry.to_json_dict(), separators=(",", ":")) + "\n")
        count += 1
    return count


def load_catalog(source: TextIO) -> List[CatalogEntry]:
    """Read entries written by save_catalog.

    Raises:
        CatalogError: On a malformed line, naming its line number
    """
    entries: List[CatalogEntry] = []
    for line_number, line in enumerate(source, start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
            entry = CatalogEntry.from_json_dict(data)
        except json.JSONDecodeError as e:
            raise CatalogError(f"invalid JSON: {e.msg}", line_number) from e
        except (KeyError, TypeError, ValueError, ValidationError) as e:
            raise CatalogError(f"invalid catalog record: {e}", line_number) from e

        try:
            decoded = from_graph6(entry.canonical)
        except GraphError as e:
            raise CatalogError(f"invalid graph6 {entry.canonical!r}: {e}", line_number) from e
        if decoded.order != entry.order:
            raise CatalogError(f"graph6 order {decoded.order} does not match n={entry.order}", line_number)
        entries.append(entry)
    return entries


def save_catalog_path(entries: Iterable[CatalogEntry], path: Union[str, Path]) -> int:
    """save_catalog into a file, wrapping I/O failures as CatalogError."""
    try:
        with open(path, "w", encoding="utf-8") as sink:
            return save_catalog(entries, sink)
    except OSError as e:
        raise CatalogError(f"cannot write catalog to {path}: {e.strerror}") from e


def load_catalog_path(path: Union[str, Path]) -> List[CatalogEntry]:
    """load_catalog from a file, wrapping I/O failures as CatalogError."""
    try:
        with open(path, "r", encoding="utf-8") as source:
            return load_catalog(source)
    except OSError as e:
        raise CatalogError(f"cannot read catalog from {path}: {e.strerror}") from e
