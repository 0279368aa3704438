"""
graph6 reader and writer on top of networkx.

networkx does the bit packing; this module checks what it lets through
(characters outside '?'..'~', a wrong body length, nonzero padding bits)
and converts between nx.Graph and the frozen Graph model, keeping vertex
order 0..n-1.
"""

import logging
from typing import Iterable, Iterator

import networkx as nx

from pcube.core.exceptions import Graph6FormatError, GraphSizeError
from pcube.models.graph import Graph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
MAX_VERTICES = (1 << 36) - 1

_OFFSET = 63
_LONG_MARK = 126


def _size_field(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the first adjacency byte)."""
    if data[0] != _LONG_MARK:
        return data[0] - _OFFSET, 1
    if len(data) >= 2 and data[1] != _LONG_MARK:
        width, start = 3, 1
    else:
        width, start = 6, 2
    if len(data) < start + width:
        raise Graph6FormatError(f"truncated {width + start}-byte size field")
    n = 0
    for byte in data[start : start + width]:
        n = (n << 6) | (byte - _OFFSET)
    return n, start + width


def _check_body(data: bytes) -> None:
    n, start = _size_field(data)
    bit_count = n * (n - 1) // 2
    body = data[start:]
    expected = (bit_count + 5) // 6
    if len(body) != expected:
        raise Graph6FormatError(f"n={n} needs {expected} adjacency bytes, found {len(body)}")
    padding = expected * 6 - bit_count
    if padding and (body[-1] - _OFFSET) & ((1 << padding) - 1):
        raise Graph6FormatError("nonzero padding bits after the adjacency data")


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return g


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; a leading >>graph6<< header is tolerated."""
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER) :]
    if not line:
        raise Graph6FormatError("empty graph6 string")

    try:
        data = line.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6FormatError("graph6 strings are printable ASCII")
    for position, byte in enumerate(data):
        if not _OFFSET <= byte <= _LONG_MARK:
            raise Graph6FormatError(
                f"character {chr(byte)!r} at position {position} is outside '?'..'~'"
            )
    _check_body(data)

    try:
        g = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError) as exc:
        raise Graph6FormatError(str(exc)) from exc
    return Graph.from_edges(g.number_of_nodes(), list(g.edges()))


def write_graph6(graph: Graph) -> str:
    """Encode without header; the output is the unique canonical string for the labeled graph."""
    if graph.n > MAX_VERTICES:
        raise GraphSizeError(f"graph6 supports at most {MAX_VERTICES} vertices, got {graph.n}")
    encoded = nx.to_graph6_bytes(to_networkx(graph), nodes=list(range(graph.n)), header=False)
    return encoded.decode("ascii").strip()


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped text) for every non-blank line."""
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        yield number, text
