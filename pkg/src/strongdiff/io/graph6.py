"""graph6 encoding of simple undirected graphs.

Layout: an optional ``>>graph6<<`` header, the order N(n), then the upper
triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte, most
significant bit first, zero padded. Every byte is stored as value + 63.
"""

from __future__ import annotations

from ..errors import ParseError
from ..graph import Graph

HEADER = ">>graph6<<"
_SMALL = 62
_MEDIUM = 258047
_LARGE = (1 << 36) - 1


def _encode_n(n: int) -> list[int]:
    if n <= _SMALL:
        return [n]
    if n <= _MEDIUM:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n <= _LARGE:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ParseError(f"order {n} too large for graph6")


def write_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    groups = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    body = "".join(chr(b + 63) for b in _encode_n(g.n) + groups)
    return (HEADER if header else "") + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Byte offsets in errors count from the first byte after any header."""
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    data = []
    for offset, ch in enumerate(line):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise ParseError(f"byte {code} outside 63..126", offset=offset)
        data.append(code - 63)
    if not data:
        raise ParseError("empty graph6 string", offset=0)
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated 36-bit order", offset=len(data))
        n, pos = _groups(data[2:8]), 8
    else:
        if len(data) < 4:
            raise ParseError("truncated 18-bit order", offset=len(data))
        n, pos = _groups(data[1:4]), 4
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos < need:
        raise ParseError(f"expected {need} adjacency bytes, found {len(data) - pos}", offset=len(data))
    if len(data) - pos > need:
        raise ParseError("trailing bytes after adjacency data", offset=pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def _groups(values: list[int]) -> int:
    out = 0
    for v in values:
        out = out << 6 | v
    return out
