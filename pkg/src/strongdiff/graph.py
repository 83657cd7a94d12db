"""Immutable simple graphs and the set calculus behind the strong differential.

Vertices are the integers ``0..n-1``. Vertex subsets are stored as Python
integers used as bitmasks (bit ``v`` set iff ``v`` is a member), wrapped in
:class:`VertexSet` at the public boundary. Every function here is pure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .errors import InvalidArgument, InvalidVertex, UndefinedInvariant


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise InvalidVertex(f"vertex set {self.mask:#x} has members outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> VertexSet:
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise InvalidVertex(f"vertex {v} out of range 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask & ~other.mask)

    def issubset(self, other: VertexSet) -> bool:
        return self.mask & ~other.mask == 0

    def sorted(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self))}}})"


SetLike = Union[VertexSet, Iterable[int], int]


@dataclass(frozen=True)
class WeightFunction:
    """A map V -> {0, 1, 2}; candidate Roman or Italian dominating function."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w not in (0, 1, 2) for w in self.weights):
            raise InvalidArgument("weights must lie in {0, 1, 2}")

    @classmethod
    def from_sets(cls, n: int, ones: int | VertexSet, twos: int | VertexSet) -> WeightFunction:
        m1 = ones.mask if isinstance(ones, VertexSet) else ones
        m2 = twos.mask if isinstance(twos, VertexSet) else twos
        if m1 & m2:
            raise InvalidArgument("V1 and V2 overlap")
        return cls(tuple(2 if m2 >> v & 1 else 1 if m1 >> v & 1 else 0 for v in range(n)))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def weight(self) -> int:
        return sum(self.weights)

    def level(self, i: int) -> VertexSet:
        return VertexSet.of(self.n, (v for v, w in enumerate(self.weights) if w == i))

    @property
    def v0(self) -> VertexSet:
        return self.level(0)

    @property
    def v1(self) -> VertexSet:
        return self.level(1)

    @property
    def v2(self) -> VertexSet:
        return self.level(2)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is normalised to a sorted tuple of pairs ``(u, v)`` with ``u < v``.
    Self-loops and repeated edges are rejected rather than silently merged.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgument("vertex count must be non-negative")
        adj = [0] * self.n
        norm = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InvalidArgument(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise InvalidVertex(f"vertex {x} out of range 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in norm:
                raise InvalidArgument(f"parallel edge {key}")
            norm.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        adj = list(adj)
        return cls(len(adj), [(u, v) for u, m in enumerate(adj) for v in iter_bits(m) if u < v])

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v!r} out of range 0..{self.n - 1}")
        return v

    def vertex_set(self, s: SetLike) -> VertexSet:
        """Coerce a VertexSet, an iterable of vertices, or a raw mask into a VertexSet of this graph."""
        if isinstance(s, VertexSet):
            if s.n != self.n:
                raise InvalidArgument(f"vertex set belongs to a graph of order {s.n}, not {self.n}")
            return s
        if isinstance(s, int):
            return VertexSet(self.n, s)
        return VertexSet.of(self.n, s)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[self.check_vertex(u)] >> self.check_vertex(v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[self.check_vertex(v)].bit_count()

    @property
    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def closed(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def components(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1

    def has_isolated_vertex(self) -> bool:
        return any(a == 0 for a in self.adj)

    def induced(self, mask: int) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``mask``, relabelled in increasing vertex order.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        old = list(iter_bits(mask))
        new = {v: i for i, v in enumerate(old)}
        edges = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), edges), old

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, list(self.edges) + [(u + shift, v + shift) for u, v in other.edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# -- set calculus (mask level) --------------------------------------------


def neighborhood_mask(g: Graph, s: int) -> int:
    out = 0
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def external_mask(g: Graph, s: int) -> int:
    return neighborhood_mask(g, s) & ~s


def weak_mask(g: Graph, d: int, ne: int | None = None) -> int:
    """Members of ``d`` owning at least one external private neighbour.

    One pass over Ne(D): a boundary vertex with exactly one neighbour in D is
    private to that neighbour.
    """
    if ne is None:
        ne = external_mask(g, d)
    weak = 0
    for u in iter_bits(ne):
        x = g.adj[u] & d
        if x & (x - 1) == 0:
            weak |= x
    return weak


def strong_differential_of(g: Graph, d: int) -> int:
    ne = external_mask(g, d)
    return ne.bit_count() - weak_mask(g, d, ne).bit_count()


def differential_of(g: Graph, d: int) -> int:
    return external_mask(g, d).bit_count() - d.bit_count()


def distance2_masks(g: Graph) -> list[int]:
    """For each v, the vertices at distance 1 or 2 from v (v excluded)."""
    out = []
    for v in range(g.n):
        m = g.adj[v]
        for u in iter_bits(g.adj[v]):
            m |= g.adj[u]
        out.append(m & ~(1 << v))
    return out


# -- public operations -------------------------------------------------------


@dataclass(frozen=True)
class DifferentialBreakdown:
    set: VertexSet
    external: VertexSet
    weak: VertexSet
    strong: VertexSet
    differential: int
    strong_differential: int


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    return VertexSet(g.n, g.adj[g.check_vertex(v)])


def external_neighborhood(g: Graph, s: SetLike) -> VertexSet:
    return VertexSet(g.n, external_mask(g, g.vertex_set(s).mask))


def external_private_neighborhood(g: Graph, v: int, d: SetLike) -> VertexSet:
    """epn(v, D): vertices outside D whose only neighbour in D is v."""
    d = g.vertex_set(d).mask
    g.check_vertex(v)
    if not d >> v & 1:
        raise InvalidArgument(f"vertex {v} is not a member of D")
    out = 0
    for u in iter_bits(g.adj[v] & ~d):
        if g.adj[u] & d == 1 << v:
            out |= 1 << u
    return VertexSet(g.n, out)


def breakdown(g: Graph, d: SetLike) -> DifferentialBreakdown:
    ds = g.vertex_set(d)
    ne = external_mask(g, ds.mask)
    weak = weak_mask(g, ds.mask, ne)
    n_ext = ne.bit_count()
    return DifferentialBreakdown(
        set=ds,
        external=VertexSet(g.n, ne),
        weak=VertexSet(g.n, weak),
        strong=VertexSet(g.n, ds.mask & ~weak),
        differential=n_ext - len(ds),
        strong_differential=n_ext - weak.bit_count(),
    )


def is_dominating(g: Graph, s: SetLike) -> bool:
    s = g.vertex_set(s).mask
    return (s | neighborhood_mask(g, s)) == g.full


def is_2_dominating(g: Graph, s: SetLike) -> bool:
    s = g.vertex_set(s).mask
    for u in iter_bits(g.full & ~s):
        if (g.adj[u] & s).bit_count() < 2:
            return False
    return True


def is_semitotal_dominating(g: Graph, s: SetLike) -> bool:
    if g.has_isolated_vertex():
        raise UndefinedInvariant("semitotal domination needs a graph without isolated vertices")
    s = g.vertex_set(s).mask
    if not is_dominating(g, s):
        return False
    d2 = distance2_masks(g)
    return all(d2[v] & s for v in iter_bits(s))


def is_vertex_cover(g: Graph, s: SetLike) -> bool:
    s = g.vertex_set(s).mask
    return all(s >> u & 1 or s >> v & 1 for u, v in g.edges)


def is_independent(g: Graph, s: SetLike) -> bool:
    s = g.vertex_set(s).mask
    return all(g.adj[v] & s == 0 for v in iter_bits(s))


def _check_length(g: Graph, f: WeightFunction) -> None:
    if f.n != g.n:
        raise InvalidArgument(f"weight function has length {f.n}, graph has {g.n} vertices")


def is_idf(g: Graph, f: WeightFunction) -> bool:
    _check_length(g, f)
    w = f.weights
    return all(w[v] or sum(w[u] for u in iter_bits(g.adj[v])) >= 2 for v in range(g.n))


def is_rdf(g: Graph, f: WeightFunction) -> bool:
    _check_length(g, f)
    twos = f.v2.mask
    return all(f.weights[v] or g.adj[v] & twos for v in range(g.n))


def leaves(g: Graph) -> VertexSet:
    return VertexSet.of(g.n, (v for v in range(g.n) if g.adj[v].bit_count() == 1))


def supports(g: Graph) -> VertexSet:
    return VertexSet(g.n, neighborhood_mask(g, leaves(g).mask))


def leaf_neighbors(g: Graph, v: int) -> VertexSet:
    return VertexSet(g.n, g.adj[g.check_vertex(v)] & leaves(g).mask)


def degree_two_neighbors(g: Graph, v: int) -> VertexSet:
    return VertexSet.of(g.n, (u for u in iter_bits(g.adj[g.check_vertex(v)]) if g.adj[u].bit_count() == 2))


def sigma(g: Graph) -> int:
    """Number of support vertices adjacent to at least two leaves."""
    lv = leaves(g).mask
    return sum(1 for v in range(g.n) if (g.adj[v] & lv).bit_count() >= 2)


def eccentricity(g: Graph, v: int) -> int:
    """Largest BFS distance from ``v`` inside its own component."""
    g.check_vertex(v)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in iter_bits(g.adj[x]):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return max(dist.values())
