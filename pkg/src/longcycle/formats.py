"""graph6 and plain edge-list text formats."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import FormatError
from .graph import Graph, from_edge_list

HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def graph6_encode(g: Graph) -> str:
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_decode(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    start = len(HEADER) if data.startswith(HEADER.encode()) else 0
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise FormatError(f"byte {data[i]!r} outside the graph6 range 63..126", i)
    pos = start
    if pos >= len(data):
        raise FormatError("missing order prefix", pos)
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        wide = pos + 1 < len(data) and data[pos + 1] == 126
        width = 6 if wide else 3
        first = pos + (2 if wide else 1)
        if first + width > len(data):
            raise FormatError("truncated order prefix", len(data))
        n = 0
        for b in data[first:first + width]:
            n = (n << 6) | (b - 63)
        pos = first + width
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise FormatError(f"bit stream truncated: expected {need} data bytes", len(data))
    if len(body) > need:
        raise FormatError("trailing bytes after adjacency data", pos + need)
    if n > 64:
        raise FormatError(f"order {n} exceeds the supported maximum 64", start)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("nonzero padding bits", pos + need - 1)
    return Graph(n, adj)


def read_graph6_lines(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per line; a blank line ends the stream.

    Offsets in raised :class:`FormatError` are relative to the whole stream.
    """
    offset = 0
    for line in stream:
        body = line.rstrip("\r\n")
        if not body.strip():
            return
        try:
            yield graph6_decode(body)
        except FormatError as exc:
            raise FormatError(str(exc).rsplit(" (byte offset", 1)[0],
                              offset + exc.offset) from None
        offset += len(line.encode("ascii", "replace"))


def edge_list_encode(g: Graph) -> str:
    edges = list(g.edges())
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def edge_list_decode(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    lines = text.splitlines(keepends=True)
    offsets = []
    pos = 0
    for line in lines:
        offsets.append(pos)
        pos += len(line.encode())
    rows = [(off, ln.split()) for off, ln in zip(offsets, lines) if ln.strip()]
    if not rows:
        raise FormatError("empty edge list", 0)

    def ints(off, parts):
        if len(parts) != 2:
            raise FormatError("expected two integers", off)
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError("expected two integers", off) from None

    n, m = ints(*rows[0])
    if len(rows) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(rows) - 1}", pos)
    return from_edge_list(n, [ints(*r) for r in rows[1:]])
