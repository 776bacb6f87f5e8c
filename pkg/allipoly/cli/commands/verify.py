"""
verify: structural invariant report for one input graph.
"""

from typing import TextIO

from allipoly.cli.inputs import STDIN, read_graph, read_polynomial, write_json
from allipoly.core.errors import GraphError
from allipoly.models.cli import CliConfig
from allipoly.services.alliance.invariants import invariant_report


def run(config: CliConfig, out: TextIO) -> int:
    """Print one PASS/FAIL line per check; exit 1 if any check failed."""
    if len(config.inputs) > 1:
        raise GraphError("verify takes a single --input")
    graph = read_graph(config.inputs[0] if config.inputs else STDIN, config.fmt)
    polynomial = read_polynomial(config.polynomial_path) if config.polynomial_path else None

    report = invariant_report(graph, polynomial=polynomial, force=config.force, threads=config.threads)

    if config.json_output:
        write_json({
            "polynomial": report.polynomial.to_json_dict(),
            "checks": [check.model_dump() for check in report.checks],
            "all_passed": report.all_passed,
        }, out)
    else:
        print(f"A(G;x) = {report.polynomial.render_text()}", file=out)
        for check in report.checks:
            print(check.render_text(), file=out)
        print("ALL PASS" if report.all_passed else f"{len(report.failed())} FAILED", file=out)
    return 0 if report.all_passed else 1
