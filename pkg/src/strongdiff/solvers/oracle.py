"""Exhaustive enumeration oracles.

Every subset (2^n rows) or every weight function (3^n rows) is materialised
as a numpy matrix and the defining predicates are evaluated column-wise. No
structural lemma is used to shrink the search space; these tables exist to
check the branch-and-bound code and to enumerate *all* optimal sets for the
existence-quantified theorem checks.

Row order is lexicographic in the vertex string (vertex 0 is the most
significant digit), so the first optimal row is the tie-break winner.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from ..errors import SizeGuardExceeded
from ..graph import Graph, distance2_masks

SUBSET_LIMIT = 16
WEIGHT_LIMIT = 12


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int32)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


class SubsetTable:
    """All 2^n vertex subsets of ``g`` with their per-set quantities."""

    def __init__(self, g: Graph, limit: int = SUBSET_LIMIT) -> None:
        if g.n > limit:
            raise SizeGuardExceeded(g.n, limit, "subset enumeration")
        self.g = g
        n = g.n
        idx = np.arange(1 << n, dtype=np.int64)
        # column v holds the digit of vertex v; vertex 0 is the top bit of the row index
        shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
        self.members = ((idx[:, None] >> shifts[None, :]) & 1).astype(bool)
        self.adj = adjacency_matrix(g)

    def mask_of(self, row: int) -> int:
        return sum(1 << v for v in range(self.g.n) if self.members[row, v])

    def masks(self, rows: np.ndarray) -> list[int]:
        return [self.mask_of(int(r)) for r in rows]

    @cached_property
    def size(self) -> np.ndarray:
        return self.members.sum(axis=1)

    @cached_property
    def hits(self) -> np.ndarray:
        """hits[k, u] = |N(u) ∩ S_k|."""
        return self.members.astype(np.int32) @ self.adj

    @cached_property
    def external(self) -> np.ndarray:
        return (~self.members & (self.hits > 0)).sum(axis=1)

    @cached_property
    def weak_members(self) -> np.ndarray:
        """weak_members[k, v]: v is in S_k and has an external private neighbour."""
        private = ~self.members & (self.hits == 1)
        owner_hit = private.astype(np.int32) @ self.adj
        return self.members & (owner_hit > 0)

    @cached_property
    def weak(self) -> np.ndarray:
        return self.weak_members.sum(axis=1)

    @cached_property
    def differential(self) -> np.ndarray:
        return self.external - self.size

    @cached_property
    def strong_differential(self) -> np.ndarray:
        return self.external - self.weak

    @cached_property
    def dominating(self) -> np.ndarray:
        return (self.members | (self.hits > 0)).all(axis=1)

    @cached_property
    def two_dominating(self) -> np.ndarray:
        return (self.members | (self.hits >= 2)).all(axis=1)

    @cached_property
    def independent(self) -> np.ndarray:
        return ~(self.members & (self.hits > 0)).any(axis=1)

    @cached_property
    def vertex_cover(self) -> np.ndarray:
        deg = self.adj.sum(axis=0)
        # an outside vertex with a neighbour also outside leaves that edge uncovered
        return ~(~self.members & (self.hits < deg[None, :])).any(axis=1)

    @cached_property
    def semitotal(self) -> np.ndarray:
        d2 = np.zeros_like(self.adj)
        for v, m in enumerate(distance2_masks(self.g)):
            for u in range(self.g.n):
                if m >> u & 1:
                    d2[v, u] = 1
        near = self.members.astype(np.int32) @ d2
        return self.dominating & ~(self.members & (near == 0)).any(axis=1)

    def best(self, score: np.ndarray, feasible: np.ndarray | None = None, maximize: bool = True) -> tuple[int, int]:
        """(optimal score, row of the lexicographically first optimum)."""
        rows = np.arange(len(score)) if feasible is None else np.flatnonzero(feasible)
        vals = score[rows]
        target = vals.max() if maximize else vals.min()
        return int(target), int(rows[np.argmax(vals == target)])

    def optimal_rows(self, score: np.ndarray, value: int, feasible: np.ndarray | None = None) -> np.ndarray:
        hit = score == value
        if feasible is not None:
            hit &= feasible
        return np.flatnonzero(hit)


class WeightTable:
    """All 3^n functions V -> {0,1,2}; row index is the base-3 lexicographic key."""

    def __init__(self, g: Graph, limit: int = WEIGHT_LIMIT) -> None:
        if g.n > limit:
            raise SizeGuardExceeded(g.n, limit, "weight-function enumeration")
        self.g = g
        n = g.n
        idx = np.arange(3**n, dtype=np.int64)
        powers = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
        self.weights = ((idx[:, None] // powers[None, :]) % 3).astype(np.int8)
        self.adj = adjacency_matrix(g).astype(np.int16)

    @cached_property
    def total(self) -> np.ndarray:
        return self.weights.sum(axis=1, dtype=np.int32)

    @cached_property
    def italian(self) -> np.ndarray:
        seen = self.weights.astype(np.int16) @ self.adj
        return ((self.weights > 0) | (seen >= 2)).all(axis=1)

    @cached_property
    def roman(self) -> np.ndarray:
        twos = (self.weights == 2).astype(np.int16) @ self.adj
        return ((self.weights > 0) | (twos > 0)).all(axis=1)

    def best(self, feasible: np.ndarray) -> tuple[int, tuple[int, ...]]:
        rows = np.flatnonzero(feasible)
        vals = self.total[rows]
        row = int(rows[np.argmin(vals)])
        return int(vals.min()), tuple(int(w) for w in self.weights[row])
