"""
census: exhaustive catalog up to --max-n with collision summary.
"""

import logging
from typing import TextIO

from allipoly.cli.inputs import write_json
from allipoly.models.cli import CliConfig
from allipoly.services.census.catalog import build_catalog, check_census_order, save_catalog_path
from allipoly.services.census.collisions import summarize_census

logger = logging.getLogger(__name__)

DEFAULT_CATALOG_PATH = "catalog.jsonl"


def run(config: CliConfig, out: TextIO) -> int:
    """Write the catalog and print the summary; exit 1 if a characterization failed."""
    check_census_order(config.max_n, config.force)
    path = config.out or DEFAULT_CATALOG_PATH

    entries = build_catalog(config.max_n, force=config.force, threads=config.threads)
    written = save_catalog_path(entries, path)
    logger.info(f"Wrote {written} catalog lines to {path}")
    summary = summarize_census(entries)

    if config.json_output:
        write_json({**summary.to_json_dict(), "catalog": path}, out)
    else:
        for n, count in sorted(summary.class_counts.items()):
            print(f"n={n}: {count} classes", file=out)
        print(f"entries: {summary.entries} (written to {path})", file=out)
        print(f"collision groups: {len(summary.collisions)}", file=out)
        for group in summary.collisions:
            print(f"  {group.polynomial.render_text()} [n={group.polynomial.order}]: {' '.join(group.members)}", file=out)
        for verdict in summary.characterizations.verdicts:
            print(verdict.render_text(), file=out)
    return 0 if summary.characterizations.all_passed else 1
