"""Membership tests for the two characterised families."""

from __future__ import annotations

import itertools

from ..errors import InvalidArgument, NotATree
from ..graph import (
    Graph,
    degree_two_neighbors,
    eccentricity,
    iter_bits,
    leaf_neighbors,
    leaves,
    supports,
)


def is_family_G(g: Graph) -> bool:
    """Order >= 3, leaves and supports partition V, and every support has >= 2 leaves."""
    if g.n < 3:
        return False
    lv, sp = leaves(g).mask, supports(g).mask
    if lv & sp or lv | sp != g.full:
        return False
    return all((g.adj[v] & lv).bit_count() >= 2 for v in iter_bits(sp))


def family_T_failures(t: Graph, v: int) -> list[str]:
    """Names of the conditions A.1-A.4 that fail at the maximum-degree vertex ``v``."""
    deg = t.degrees
    sp = supports(t).mask
    failed = []
    if not sp >> v & 1 or eccentricity(t, v) > 3:
        failed.append("A.1")
    if any(deg[u] > 3 or len(degree_two_neighbors(t, u)) > 1 for u in iter_bits(t.adj[v])):
        failed.append("A.2")
    outside = t.full & ~t.closed(v)
    if any(deg[u] > 2 for u in iter_bits(outside)):
        failed.append("A.3")
    if not (
        len(leaf_neighbors(t, v)) >= 2
        or any(deg[u] == 2 for u in iter_bits(t.adj[v] & sp))
    ):
        failed.append("A.4")
    return failed


def is_family_T(t: Graph) -> bool:
    """Literal check of A.1-A.4 at every vertex of maximum degree."""
    if not t.is_tree():
        raise NotATree("family T is a family of trees")
    if t.n < 3:
        raise InvalidArgument("family T is defined for trees of order >= 3")
    delta = t.max_degree
    return all(not family_T_failures(t, v) for v in range(t.n) if t.degree(v) == delta)


def _isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    image = [-1] * a.n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == a.n:
            return True
        for w in range(b.n):
            if used >> w & 1 or a.degree(v) != b.degree(w):
                continue
            if all(b.has_edge(image[u], w) == a.has_edge(u, v) for u in range(v)):
                image[v] = w
                used |= 1 << w
                if extend(v + 1):
                    return True
                used &= ~(1 << w)
        return False

    return extend(0)


def corona_decomposition(g: Graph) -> tuple[int, int] | None:
    """Find ``(core_mask, n2)`` with g isomorphic to G1 corona G2 and n(G2) >= 2, else None.

    A candidate core X must give every x in X a private block N(x) minus X of
    size n2, the blocks must partition V minus X with no edges between blocks,
    and all blocks must induce isomorphic graphs.
    """
    n = g.n
    for k in range(1, n // 3 + 1):
        if n % k:
            continue
        n2 = n // k - 1
        candidates = [v for v in range(n) if g.degree(v) >= n2]
        for core in itertools.combinations(candidates, k):
            x = sum(1 << v for v in core)
            if _is_corona_core(g, x, core, n2):
                return x, n2
    return None


def _is_corona_core(g: Graph, x: int, core: tuple[int, ...], n2: int) -> bool:
    covered = 0
    blocks = []
    for v in core:
        block = g.adj[v] & ~x
        if block.bit_count() != n2 or block & covered:
            return False
        covered |= block
        blocks.append(block)
    if covered | x != g.full:
        return False
    for v, block in zip(core, blocks):
        for u in iter_bits(block):
            # u may touch only its own core vertex and its own block
            if g.adj[u] & ~(block | 1 << v):
                return False
    first = g.induced(blocks[0])[0]
    return all(_isomorphic(first, g.induced(b)[0]) for b in blocks[1:])
