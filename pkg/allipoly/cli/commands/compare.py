"""
compare: classical and alliance polynomials on two graphs, or the distinguishing suite.
"""

from typing import TextIO

from allipoly.cli.inputs import read_graph, write_json
from allipoly.models.cli import CliConfig
from allipoly.services.comparison.suite import compare_graphs, distinguishing_suite


def _run_suite(config: CliConfig, out: TextIO) -> int:
    report = distinguishing_suite()
    if config.json_output:
        write_json(report.to_json_dict(), out)
    else:
        for item in report.items:
            print(item.render_text(), file=out)
    return 0 if report.all_verified else 1


def run(config: CliConfig, out: TextIO) -> int:
    """Print "name: EQUAL|UNEQUAL" per polynomial."""
    if config.suite:
        return _run_suite(config, out)

    first, second = (read_graph(path, config.fmt) for path in config.inputs)
    results = compare_graphs(first, second, config.polys or ["alliance"], force=config.force)

    if config.json_output:
        write_json({"comparisons": [result.model_dump() for result in results]}, out)
    else:
        for result in results:
            print(result.render_text(), file=out)
    return 0
