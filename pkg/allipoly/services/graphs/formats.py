"""
Text formats for graphs: whitespace edge lists and graph6.

Edge-list text:
    # comment lines start with '#'
    4          <- order n
    0 1        <- one 0-based edge per line
    1 2

graph6 (orders up to 62): one header character chr(n + 63), then the upper
triangle bits (0,1), (0,2), (1,2), (0,3), ... in column order, packed six per
character with offset 63 and zero padding at the end.
"""

import logging
from typing import List, Tuple

from allipoly.core.errors import GraphFormatError
from allipoly.models.graph import Graph
from allipoly.services.graphs.builders import new_graph

logger = logging.getLogger(__name__)

GRAPH6_OFFSET = 63
GRAPH6_MAX_ORDER = 62
GRAPH6_HEADER = ">>graph6<<"


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", line_number)


def from_edge_list_text(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Args:
        text: Order line followed by one "u v" pair per line

    Returns:
        Graph equal to new_graph(n, pairs)

    Raises:
        GraphFormatError: If the order line is missing, a line is malformed or an index is out of range
    """
    order = None
    edges: List[Tuple[int, int]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        tokens = line.split()
        if order is None:
            if len(tokens) != 1:
                raise GraphFormatError(f"expected the order on its own line, got {line!r}", line_number)
            order = _parse_int(tokens[0], line_number)
            if order < 1:
                raise GraphFormatError(f"order must be at least 1, got {order}", line_number)
            continue

        if len(tokens) != 2:
            raise GraphFormatError(f"expected two vertex indices, got {line!r}", line_number)
        u, v = (_parse_int(token, line_number) for token in tokens)
        for index in (u, v):
            if not 0 <= index < order:
                raise GraphFormatError(f"vertex index {index} out of range 0..{order - 1}", line_number)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line_number)
        edges.append((u, v))

    if order is None:
        raise GraphFormatError("missing order line")

    logger.debug(f"Parsed edge list with n={order} and {len(edges)} edge lines")
    return new_graph(order, edges)


def to_edge_list_text(graph: Graph) -> str:
    """Render a Graph as edge-list text accepted by from_edge_list_text."""
    lines = [str(graph.order)] + [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def to_graph6(graph: Graph) -> str:
    """Encode a Graph as graph6 text (no header, no newline)."""
    n = graph.order
    if n > GRAPH6_MAX_ORDER:
        raise GraphFormatError(f"graph6 encoding supports n <= {GRAPH6_MAX_ORDER}, got {n}")

    chars = [chr(n + GRAPH6_OFFSET)]
    group = 0
    filled = 0
    for j in range(1, n):
        row = graph.adjacency[j]
        for i in range(j):
            group = (group << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(group + GRAPH6_OFFSET))
                group = 0
                filled = 0
    if filled:
        chars.append(chr((group << (6 - filled)) + GRAPH6_OFFSET))

    return "".join(chars)


def from_graph6(text: str) -> Graph:
    """Decode graph6 text into a Graph.

    Raises:
        GraphFormatError: On a bad character, unsupported order or a truncated bit stream
    """
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphFormatError("empty graph6 string")

    for position, char in enumerate(data):
        if not GRAPH6_OFFSET <= ord(char) <= GRAPH6_OFFSET + 63:
            raise GraphFormatError(f"bad graph6 character {char!r} at position {position}")

    n = ord(data[0]) - GRAPH6_OFFSET
    if n > GRAPH6_MAX_ORDER:
        raise GraphFormatError(f"graph6 orders above {GRAPH6_MAX_ORDER} are not supported")

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    body = data[1:]
    if len(body) < expected:
        raise GraphFormatError(f"truncated graph6 bit stream: expected {expected} characters, got {len(body)}")
    if len(body) > expected:
        raise GraphFormatError(f"graph6 string has {len(body) - expected} trailing characters")

    bits = 0
    for char in body:
        bits = (bits << 6) | (ord(char) - GRAPH6_OFFSET)
    # Drop padding so bit 0 of the stream is the most significant remaining bit
    bits >>= expected * 6 - bit_count

    edges: List[Tuple[int, int]] = []
    position = bit_count - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> position & 1:
                edges.append((i, j))
            position -= 1

    return new_graph(n, edges)


def parse_graph_text(text: str, fmt: str) -> Graph:
    """Parse text in the named format ("edgelist" or "graph6")."""
    if fmt == "edgelist":
        return from_edge_list_text(text)
    if fmt == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, got {len(lines)}")
        return from_graph6(lines[0])
    raise GraphFormatError(f"unknown graph format {fmt!r}")
