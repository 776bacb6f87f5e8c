"""
compute: alliance polynomial of one input graph.
"""

import logging
from typing import Any, Dict, TextIO

from allipoly.cli.inputs import STDIN, read_graph, write_json
from allipoly.core.errors import GraphError
from allipoly.models.cli import CliConfig
from allipoly.services.alliance.analysis import evaluate, parse_rational
from allipoly.services.alliance.engine import alliance_polynomial

logger = logging.getLogger(__name__)


def run(config: CliConfig, out: TextIO) -> int:
    """Print A(G;x), optionally with its value at --eval."""
    if len(config.inputs) > 1:
        raise GraphError("compute takes a single --input")
    path = config.inputs[0] if config.inputs else STDIN
    graph = read_graph(path, config.fmt)
    logger.info(f"Read graph with n={graph.order}, m={graph.size} from {path}")

    point = parse_rational(config.eval_point) if config.eval_point is not None else None
    polynomial = alliance_polynomial(graph, force=config.force, threads=config.threads)
    value = evaluate(polynomial, point) if point is not None else None

    if config.json_output:
        data: Dict[str, Any] = polynomial.to_json_dict()
        if point is not None:
            data["eval"] = {"x": str(point), "value": str(value)}
        write_json(data, out)
    else:
        print(polynomial.render_text(), file=out)
        if point is not None:
            print(value, file=out)
    return 0
