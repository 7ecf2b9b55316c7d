"""graph6 and DOT interchange.

graph6 follows the format published with nauty: a size header ``N(n)``
followed by the upper triangle of the adjacency matrix, column by column,
packed into 6-bit groups offset by 63. The optional ``>>graph6<<`` header
is accepted on input and never written.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator, Mapping

from .graph import Graph, members

__all__ = [
    "Graph6Error",
    "graph6_encode",
    "graph6_decode",
    "read_graph6_stream",
    "write_graph6_stream",
    "dot_export",
]

_HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def graph6_encode(g: Graph) -> bytes:
    """graph6 bytes for ``g`` (no header, no trailing newline)."""
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 36-bit size header")
        body, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 18-bit size header")
        body, start = data[1:4], 4
    n = 0
    for c in body:
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid size byte {c!r}")
        n = (n << 6) | (c - 63)
    return n, start


def graph6_decode(s: str | bytes) -> Graph:
    """Parse one graph6 line."""
    data = s.encode("ascii") if isinstance(s, str) else bytes(s)
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside the graph6 range 63..126")
    n, start = _decode_size(data)
    body = data[start:]
    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(body) != expected:
        raise Graph6Error(f"n={n} needs {expected} data bytes, found {len(body)}")
    rows = [0] * n
    bits = iter(((c - 63) >> (5 - k)) & 1 for c in body for k in range(6))
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    if any(bits):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, rows)


def read_graph6_stream(lines: Iterable[str | bytes]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line.

    Parse failures are yielded rather than raised so a caller can report
    them and continue.
    """
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            yield lineno, graph6_decode(text)
        except Graph6Error as exc:
            yield lineno, exc


def write_graph6_stream(graphs: Iterable[Graph], fh: IO[str]) -> int:
    count = 0
    for g in graphs:
        fh.write(graph6_encode(g).decode("ascii"))
        fh.write("\n")
        count += 1
    return count


def dot_export(
    g: Graph,
    highlight: Iterable[int] | None = None,
    names: Mapping[str, int] | None = None,
    graph_name: str = "G",
) -> str:
    """Undirected DOT text with vertices and edges in label order."""
    marked = set(highlight or ())
    label_of = {v: k for k, v in names.items()} if names else {}
    lines = [f"graph {graph_name} {{"]
    for v in range(g.n):
        attrs = []
        if v in label_of:
            attrs.append(f'label="{label_of[v]}"')
        if v in marked:
            attrs.append('style=filled, fillcolor="#f4a261"')
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}];" if attrs else ";"))
    for u in range(g.n):
        for v in members(g.rows[u] >> (u + 1) << (u + 1)):
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
