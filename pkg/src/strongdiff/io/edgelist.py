"""Plain edge-list text: a ``n <count>`` line, then one ``u v`` pair per line.

Blank lines and ``#`` comments are ignored. Vertices are 0-based.
"""

from __future__ import annotations

from ..errors import ParseError
from ..graph import Graph


def parse_edgelist(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError("expected header 'n <count>'", line=lineno)
            n = _int(tokens[1], lineno)
            if n < 0:
                raise ParseError("negative vertex count", line=lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", line=lineno)
        u, v = _int(tokens[0], lineno), _int(tokens[1], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]}-{key[1]}", line=lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing header 'n <count>'", line=1)
    return Graph(n, edges)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", line=lineno) from None


def write_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
