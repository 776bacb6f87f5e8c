"""
family: closed-form polynomial of a named family, optionally cross-checked.
"""

import logging
from typing import Any, Dict, TextIO

from allipoly.cli.inputs import write_json
from allipoly.models.cli import CliConfig
from allipoly.services.alliance.closed_forms import closed_form
from allipoly.services.alliance.engine import alliance_polynomial
from allipoly.services.graphs.builders import family_graph

logger = logging.getLogger(__name__)


def run(config: CliConfig, out: TextIO) -> int:
    """Print the closed form; with --brute-force also MATCH or MISMATCH (exit 1)."""
    polynomial = closed_form(config.family, config.n, config.m)

    verdict = None
    if config.brute_force:
        graph = family_graph(config.family, config.n, config.m)
        enumerated = alliance_polynomial(graph, force=config.force, threads=config.threads)
        verdict = "MATCH" if enumerated == polynomial else "MISMATCH"
        if verdict == "MISMATCH":
            logger.error(f"Closed form {polynomial} differs from enumeration {enumerated}")

    if config.json_output:
        data: Dict[str, Any] = {"family": config.family, **polynomial.to_json_dict()}
        if config.m is not None:
            data["m"] = config.m
        if verdict is not None:
            data["brute_force"] = verdict
        write_json(data, out)
    else:
        print(polynomial.render_text(), file=out)
        if verdict is not None:
            print(verdict, file=out)
    return 1 if verdict == "MISMATCH" else 0
