"""Labeled trees via Prüfer sequences, canonical forms, and exhaustive enumeration."""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from ..errors import InvalidSpec, NotATree
from ..graph import Graph, iter_bits
from .rng import SplitMix64

MAX_ENUMERATION_ORDER = 12


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    if n < 1:
        raise InvalidSpec("a tree needs at least one vertex")
    if n == 1:
        return Graph(1)
    if len(seq) != n - 2 or any(not 0 <= x < n for x in seq):
        raise InvalidSpec(f"not a Prüfer sequence for n={n}: {list(seq)}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return Graph(n, edges)


def prufer_encode(t: Graph) -> list[int]:
    if not t.is_tree():
        raise NotATree("Prüfer encoding needs a tree")
    adj = list(t.adj)
    heap = [v for v in range(t.n) if adj[v].bit_count() == 1]
    heapq.heapify(heap)
    seq = []
    for _ in range(t.n - 2):
        leaf = heapq.heappop(heap)
        parent = adj[leaf].bit_length() - 1
        seq.append(parent)
        adj[parent] &= ~(1 << leaf)
        if adj[parent].bit_count() == 1:
            heapq.heappush(heap, parent)
    return seq


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree: decode a uniform Prüfer sequence."""
    if n < 1:
        raise InvalidSpec("random_tree needs n >= 1")
    rng = SplitMix64(seed)
    return prufer_decode([rng.below(n) for _ in range(max(n - 2, 0))], n)


def labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n vertices, lazily, in Prüfer-sequence order."""
    if n < 1:
        raise InvalidSpec("n must be >= 1")
    if n <= 2:
        yield prufer_decode([], n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def centers(t: Graph) -> list[int]:
    """The one or two central vertices, found by peeling leaves."""
    remaining = t.full
    degree = t.degrees
    layer = [v for v in range(t.n) if degree[v] <= 1]
    left = t.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            remaining &= ~(1 << v)
            for u in iter_bits(t.adj[v] & remaining):
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(iter_bits(remaining))


def _rooted_code(t: Graph, root: int) -> str:
    def code(v: int, parent: int) -> str:
        kids = sorted(code(u, v) for u in iter_bits(t.adj[v]) if u != parent)
        return "(" + "".join(kids) + ")"

    return code(root, -1)


def tree_canonical_form(t: Graph) -> str:
    """AHU encoding rooted at the center (minimum over both centers when bicentral)."""
    if not t.is_tree():
        raise NotATree("canonical tree encoding needs a tree")
    return min(_rooted_code(t, c) for c in centers(t))


def _from_code(code: str) -> Graph:
    # rebuild with BFS-free preorder labels; deterministic for a given code
    edges = []
    stack: list[int] = []
    count = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], count))
            stack.append(count)
            count += 1
        else:
            stack.pop()
    return Graph(count, edges)


@lru_cache(maxsize=None)
def _tree_codes(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("()",)
    found = set()
    for code in _tree_codes(n - 1):
        base = _from_code(code)
        for v in range(base.n):
            grown = Graph(n, list(base.edges) + [(v, n - 1)])
            found.add(tree_canonical_form(grown))
    return tuple(sorted(found))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on n vertices (n <= 12).

    Classes are grown by attaching a leaf to every vertex of every class on
    n-1 vertices and de-duplicated by canonical form; every tree arises this
    way because deleting any leaf leaves a tree.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise InvalidSpec(f"enumerate_trees supports 1 <= n <= {MAX_ENUMERATION_ORDER}")
    for code in _tree_codes(n):
        yield _from_code(code)
