"""Text formats for graphs and colourings.

Graph files::

    # optional comment lines
    graph <n> <m>
    <u> <v>          (m lines, 0-based vertex indices)

Colouring files::

    colouring <m> <c>
    <edge-index> <colour>   (m lines, 0-based edges, 1-based colours)

Writers emit a canonical form (no comments, edges in index order) so that
identical inputs produce byte-identical files.
"""

from __future__ import annotations

from typing import Iterator

from .colouring import EdgeColouring
from .errors import FormatError
from .graph import Graph, build_graph


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise FormatError("empty graph file") from None
    parts = header.split()
    if len(parts) != 3 or parts[0] != "graph":
        raise FormatError(f"line {header_no}: expected header 'graph <n> <m>', got {header!r}")
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"line {header_no}: non-integer counts in {header!r}") from None
    pairs = []
    for number, line in lines:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {number}: expected '<u> <v>', got {line!r}")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise FormatError(f"line {number}: non-integer endpoint in {line!r}") from None
        if len(pairs) > m:
            raise FormatError(f"line {number}: more than the declared {m} edges")
    if len(pairs) != m:
        raise FormatError(f"declared {m} edges but found {len(pairs)}")
    try:
        return build_graph(n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_graph(graph: Graph) -> str:
    lines = [f"graph {graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_colouring(text: str) -> EdgeColouring:
    lines = _content_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise FormatError("empty colouring file") from None
    parts = header.split()
    if len(parts) != 3 or parts[0] != "colouring":
        raise FormatError(f"line {header_no}: expected header 'colouring <m> <c>', got {header!r}")
    try:
        m, c = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"line {header_no}: non-integer counts in {header!r}") from None
    if c < 1:
        raise FormatError(f"line {header_no}: colour count must be positive")
    colours: list[int | None] = [None] * m
    for number, line in lines:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {number}: expected '<edge-index> <colour>', got {line!r}")
        try:
            e, colour = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {number}: non-integer field in {line!r}") from None
        if not 0 <= e < m:
            raise FormatError(f"line {number}: edge index {e} outside 0..{m - 1}")
        if colours[e] is not None:
            raise FormatError(f"line {number}: edge {e} coloured twice")
        if not 1 <= colour <= c:
            raise FormatError(f"line {number}: colour {colour} outside 1..{c}")
        colours[e] = colour
    missing = [e for e, value in enumerate(colours) if value is None]
    if missing:
        raise FormatError(f"edges without a colour: {missing[:5]}")
    return EdgeColouring(tuple(colours), c)  # type: ignore[arg-type]


def format_colouring(colouring: EdgeColouring) -> str:
    lines = [f"colouring {len(colouring.colours)} {colouring.colour_count}"]
    lines.extend(f"{e} {c}" for e, c in enumerate(colouring.colours))
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())


def write_graph(path: str, graph: Graph) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_graph(graph))


def read_colouring(path: str) -> EdgeColouring:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_colouring(handle.read())


def write_colouring(path: str, colouring: EdgeColouring) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_colouring(colouring))
