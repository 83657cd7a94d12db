"""Lazy per-graph cache of invariants, structure queries and the subset table."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from ..graph import Graph, sigma
from ..solvers import Invariant, InvariantResult, SolverConfig, solve, verify_witness
from ..solvers.oracle import SubsetTable


class GraphProfile:
    """Everything the theorem checks ask about one graph, computed at most once.

    Invariants come from the branch-and-bound solvers and every witness is
    re-validated as it is produced. The full subset table is built only when
    ``n <= cfg.strict_guard``; existence and "for every optimal set" claims
    need it and report Inconclusive without it.
    """

    def __init__(self, g: Graph, cfg: SolverConfig | None = None) -> None:
        self.g = g
        self.cfg = cfg or SolverConfig()
        self._results: dict[Invariant, InvariantResult] = {}
        self.witness_failures: list[Invariant] = []

    # -- invariants -------------------------------------------------------

    def result(self, inv: Invariant) -> InvariantResult:
        if inv not in self._results:
            res = solve(self.g, inv, self.cfg)
            if not verify_witness(self.g, res):
                self.witness_failures.append(inv)
            self._results[inv] = res
        return self._results[inv]

    def value(self, inv: Invariant) -> int:
        return self.result(inv).value

    @property
    def results(self) -> dict[Invariant, InvariantResult]:
        return dict(self._results)

    @property
    def ds(self) -> int:
        return self.value(Invariant.STRONG_DIFFERENTIAL)

    @property
    def diff(self) -> int:
        return self.value(Invariant.DIFFERENTIAL)

    @property
    def gamma(self) -> int:
        return self.value(Invariant.DOMINATION)

    @property
    def gamma2(self) -> int:
        return self.value(Invariant.TWO_DOMINATION)

    @property
    def gamma_t2(self) -> int:
        return self.value(Invariant.SEMITOTAL_DOMINATION)

    @property
    def gamma_r(self) -> int:
        return self.value(Invariant.ROMAN_DOMINATION)

    @property
    def gamma_i(self) -> int:
        return self.value(Invariant.ITALIAN_DOMINATION)

    @property
    def alpha(self) -> int:
        return self.value(Invariant.INDEPENDENCE)

    @property
    def beta(self) -> int:
        return self.value(Invariant.VERTEX_COVER)

    # -- structure --------------------------------------------------------

    @property
    def n(self) -> int:
        return self.g.n

    @cached_property
    def max_degree(self) -> int:
        return self.g.max_degree

    @cached_property
    def min_degree(self) -> int:
        return self.g.min_degree

    @cached_property
    def connected(self) -> bool:
        return self.g.is_connected()

    @cached_property
    def tree(self) -> bool:
        return self.g.is_tree()

    @cached_property
    def sigma(self) -> int:
        return sigma(self.g)

    @cached_property
    def components_active(self) -> bool:
        """Every component has maximum degree at least two."""
        return all(self.g.induced(c)[0].max_degree >= 2 for c in self.g.components())

    # -- exhaustive views -------------------------------------------------

    @cached_property
    def table(self) -> SubsetTable | None:
        if self.g.n > self.cfg.strict_guard:
            return None
        return SubsetTable(self.g, self.cfg.strict_guard)

    @property
    def exhaustive(self) -> bool:
        return self.table is not None

    @cached_property
    def optimal_ds_rows(self) -> np.ndarray:
        """Rows of all subsets attaining the strong differential (unrestricted)."""
        t = self._need_table()
        return np.flatnonzero(t.strong_differential == t.strong_differential.max())

    @cached_property
    def gamma_rows(self) -> np.ndarray:
        t = self._need_table()
        return np.flatnonzero(t.dominating & (t.size == self.gamma))

    def _need_table(self) -> SubsetTable:
        if self.table is None:
            raise RuntimeError("exhaustive view requested above the strict guard")
        return self.table
