"""
Reading graphs and polynomials named on the command line.
"""

import json
import logging
import sys
from typing import Any, Dict, TextIO

from allipoly.core.errors import GraphFormatError, PolynomialError
from allipoly.models.alliance import AlliancePolynomial
from allipoly.models.graph import Graph
from allipoly.services.graphs.formats import parse_graph_text

logger = logging.getLogger(__name__)

STDIN = "-"


def read_text(path: str) -> str:
    """Contents of a file, or of standard input for "-"."""
    if path == STDIN:
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as source:
            return source.read()
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e.strerror}") from e


def read_graph(path: str, fmt: str) -> Graph:
    """Parse one graph file in the given format."""
    text = read_text(path)
    if not text.strip():
        raise GraphFormatError(f"{path}: empty input")
    try:
        graph = parse_graph_text(text, fmt)
    except GraphFormatError as e:
        raise GraphFormatError(f"{path}: {e}") from e
    logger.debug(f"Read graph from {path}: n={graph.order}, m={graph.size}")
    return graph


def read_polynomial(path: str) -> AlliancePolynomial:
    """Parse a polynomial written by `compute --json`."""
    text = read_text(path)
    try:
        return AlliancePolynomial.from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        raise PolynomialError(f"{path}: invalid polynomial JSON: {e}") from e


def write_json(data: Dict[str, Any], out: TextIO) -> None:
    """Pretty-print one JSON document."""
    print(json.dumps(data, indent=2, default=str), file=out)
