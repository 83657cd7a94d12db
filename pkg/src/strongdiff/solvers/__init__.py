"""Exact solvers for the strong differential and its companion invariants.

Every invariant has a branch-and-bound route (the default) and a brute-force
oracle route. Searches run per connected component and the results are
stitched back together; all the invariants here are additive over components,
and the stitched witness is still the lexicographically smallest optimum.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Callable, Union

from ..errors import EmptyGraph, InvalidArgument, SizeGuardExceeded, UndefinedInvariant
from ..graph import (
    DifferentialBreakdown,
    Graph,
    VertexSet,
    WeightFunction,
    breakdown,
    differential_of,
    is_2_dominating,
    is_dominating,
    is_idf,
    is_independent,
    is_rdf,
    is_semitotal_dominating,
    is_vertex_cover,
    iter_bits,
    neighborhood_mask,
    strong_differential_of,
)
from . import search
from .oracle import SUBSET_LIMIT, WEIGHT_LIMIT, SubsetTable, WeightTable


class Invariant(str, enum.Enum):
    STRONG_DIFFERENTIAL = "strong-differential"
    DIFFERENTIAL = "differential"
    DOMINATION = "domination"
    TWO_DOMINATION = "two-domination"
    SEMITOTAL_DOMINATION = "semitotal-domination"
    ROMAN_DOMINATION = "roman-domination"
    ITALIAN_DOMINATION = "italian-domination"
    INDEPENDENCE = "independence"
    VERTEX_COVER = "vertex-cover"

    @property
    def uses_weights(self) -> bool:
        return self in (Invariant.ROMAN_DOMINATION, Invariant.ITALIAN_DOMINATION)


class Method(str, enum.Enum):
    BRANCH_AND_BOUND = "branch-and-bound"
    BRUTE_FORCE = "brute-force"
    GALLAI_DERIVED = "gallai-derived"


Witness = Union[VertexSet, WeightFunction]


def _default_guard() -> int:
    raw = os.environ.get("STRONGDIFF_GUARD")
    return int(raw) if raw else 20


@dataclass(frozen=True)
class SolverConfig:
    size_guard: int = field(default_factory=_default_guard)
    allow_guard_override: bool = False
    # exhaustive "for all optimal sets" theorem checks run only up to this order
    strict_guard: int = SUBSET_LIMIT
    tie_break: str = "lexicographic"

    def __post_init__(self) -> None:
        if self.size_guard < 1:
            raise InvalidArgument("size_guard must be >= 1")
        if self.tie_break != "lexicographic":
            raise InvalidArgument("only the lexicographic tie-break is supported")


@dataclass(frozen=True)
class InvariantResult:
    invariant: Invariant
    value: int
    witness: Witness
    method: Method
    breakdown: DifferentialBreakdown | None = None


def _admit(g: Graph, cfg: SolverConfig) -> None:
    if g.n == 0:
        raise EmptyGraph("invariants are not defined on the empty graph")
    if g.n > cfg.size_guard and not cfg.allow_guard_override:
        raise SizeGuardExceeded(g.n, cfg.size_guard)


def _require_no_isolated(g: Graph) -> None:
    if g.has_isolated_vertex():
        raise UndefinedInvariant("semitotal domination needs a graph without isolated vertices")


def _per_component_sets(g: Graph, kernel: Callable[[Graph], tuple[int, int]]) -> tuple[int, int]:
    total, mask = 0, 0
    for comp in g.components():
        sub, old = g.induced(comp)
        value, local = kernel(sub)
        total += value
        for i in iter_bits(local):
            mask |= 1 << old[i]
    return total, mask


def _per_component_weights(
    g: Graph, kernel: Callable[[Graph], tuple[int, tuple[int, ...]]]
) -> tuple[int, tuple[int, ...]]:
    total = 0
    weights = [0] * g.n
    for comp in g.components():
        sub, old = g.induced(comp)
        value, local = kernel(sub)
        total += value
        for i, w in enumerate(local):
            weights[old[i]] = w
    return total, tuple(weights)


_SET_KERNELS: dict[Invariant, Callable[[Graph], tuple[int, int]]] = {
    Invariant.STRONG_DIFFERENTIAL: search.max_strong_differential,
    Invariant.DIFFERENTIAL: search.max_differential,
    Invariant.DOMINATION: search.min_dominating,
    Invariant.TWO_DOMINATION: search.min_two_dominating,
    Invariant.SEMITOTAL_DOMINATION: search.min_semitotal,
    Invariant.INDEPENDENCE: search.max_independent,
    Invariant.VERTEX_COVER: search.min_vertex_cover,
}

_WEIGHT_KERNELS = {
    Invariant.ROMAN_DOMINATION: search.min_roman,
    Invariant.ITALIAN_DOMINATION: search.min_italian,
}


def _set_result(g: Graph, inv: Invariant, value: int, mask: int, method: Method) -> InvariantResult:
    bd = None
    if inv in (Invariant.STRONG_DIFFERENTIAL, Invariant.DIFFERENTIAL):
        bd = breakdown(g, mask)
    return InvariantResult(inv, value, VertexSet(g.n, mask), method, bd)


def solve(g: Graph, inv: Invariant | str, cfg: SolverConfig | None = None) -> InvariantResult:
    """Branch-and-bound solve of one invariant with its lexicographically first optimal witness."""
    cfg = cfg or SolverConfig()
    inv = Invariant(inv)
    _admit(g, cfg)
    if inv is Invariant.SEMITOTAL_DOMINATION:
        _require_no_isolated(g)
    if inv.uses_weights:
        value, weights = _per_component_weights(g, _WEIGHT_KERNELS[inv])
        return InvariantResult(inv, value, WeightFunction(weights), Method.BRANCH_AND_BOUND)
    value, mask = _per_component_sets(g, _SET_KERNELS[inv])
    return _set_result(g, inv, value, mask, Method.BRANCH_AND_BOUND)


def strong_differential(g: Graph, cfg: SolverConfig | None = None) -> InvariantResult:
    """Strong differential; the witness is always a dominating optimal set."""
    return solve(g, Invariant.STRONG_DIFFERENTIAL, cfg)


def differential(g: Graph, cfg: SolverConfig | None = None) -> InvariantResult:
    return solve(g, Invariant.DIFFERENTIAL, cfg)


def domination_number(g: Graph, cfg: SolverConfig | None = None) -> InvariantResult:
    return solve(g, Invariant.DOMINATION, cfg)


def two_domination_number(g: Graph, cfg: SolverConfig | None = None) -> InvariantResult:
    return solve(g, Invariant.TWO_DOMINATION, cfg)


def semitotal_domination_number(g: Graph, cfg: SolverConfig | None = None) -> InvariantResult:
    return solve(g, Invariant.SEMITOTAL_DOMINATION, cfg)


def independence_number(g: Graph, cfg: SolverConfig | None = None) -> InvariantResult:
    return solve(g, Invariant.INDEPENDENCE, cfg)


def vertex_cover_number(g: Graph, cfg: SolverConfig | None = None) -> InvariantResult:
    return solve(g, Invariant.VERTEX_COVER, cfg)


def roman_domination_number(g: Graph, cfg: SolverConfig | None = None) -> InvariantResult:
    return solve(g, Invariant.ROMAN_DOMINATION, cfg)


def italian_domination_number(g: Graph, cfg: SolverConfig | None = None) -> InvariantResult:
    return solve(g, Invariant.ITALIAN_DOMINATION, cfg)


# -- oracles -----------------------------------------------------------------


def oracle(g: Graph, inv: Invariant | str) -> InvariantResult:
    """Plain enumeration over the whole graph: 2^n subsets (n <= 16) or 3^n functions (n <= 12)."""
    inv = Invariant(inv)
    if g.n == 0:
        raise EmptyGraph("invariants are not defined on the empty graph")
    if inv.uses_weights:
        table = WeightTable(g, WEIGHT_LIMIT)
        feasible = table.italian if inv is Invariant.ITALIAN_DOMINATION else table.roman
        value, weights = table.best(feasible)
        return InvariantResult(inv, value, WeightFunction(weights), Method.BRUTE_FORCE)
    if inv is Invariant.SEMITOTAL_DOMINATION:
        _require_no_isolated(g)
    t = SubsetTable(g, SUBSET_LIMIT)
    score, feasible, maximize = {
        Invariant.STRONG_DIFFERENTIAL: (t.strong_differential, None, True),
        Invariant.DIFFERENTIAL: (t.differential, None, True),
        Invariant.DOMINATION: (t.size, t.dominating, False),
        Invariant.TWO_DOMINATION: (t.size, t.two_dominating, False),
        Invariant.SEMITOTAL_DOMINATION: (t.size, t.semitotal, False),
        Invariant.INDEPENDENCE: (t.size, t.independent, True),
        Invariant.VERTEX_COVER: (t.size, t.vertex_cover, False),
    }[inv]
    value, row = t.best(score, feasible, maximize)
    return _set_result(g, inv, value, t.mask_of(row), Method.BRUTE_FORCE)


def strong_differential_oracle(g: Graph) -> InvariantResult:
    return oracle(g, Invariant.STRONG_DIFFERENTIAL)


# -- Gallai-type routes -------------------------------------------------------

_GALLAI_BASE = {
    Invariant.ITALIAN_DOMINATION: Invariant.STRONG_DIFFERENTIAL,
    Invariant.ROMAN_DOMINATION: Invariant.DIFFERENTIAL,
    Invariant.VERTEX_COVER: Invariant.INDEPENDENCE,
}


def gallai_derived(g: Graph, which: Invariant | str, cfg: SolverConfig | None = None) -> InvariantResult:
    """Italian, Roman or vertex-cover number as n minus its Gallai partner, with a converted witness.

    Italian: weight 2 on the weak and 1 on the strong members of a dominating
    optimal strong-differential set. Roman: weight 2 on an optimal differential
    set and 1 on the vertices it leaves undominated. Vertex cover: complement of
    a maximum independent set.
    """
    which = Invariant(which)
    if which not in _GALLAI_BASE:
        raise InvalidArgument(f"no Gallai-type identity for {which.value}")
    base = solve(g, _GALLAI_BASE[which], cfg)
    s = base.witness.mask
    if which is Invariant.ITALIAN_DOMINATION:
        witness: Witness = WeightFunction.from_sets(g.n, base.breakdown.strong, base.breakdown.weak)
    elif which is Invariant.ROMAN_DOMINATION:
        lonely = g.full & ~(s | neighborhood_mask(g, s))
        witness = WeightFunction.from_sets(g.n, lonely, s)
    else:
        witness = VertexSet(g.n, g.full & ~s)
    return InvariantResult(which, g.n - base.value, witness, Method.GALLAI_DERIVED)


def dominating_strong_witness(g: Graph, cfg: SolverConfig | None = None) -> VertexSet:
    """A set that is both dominating and optimal for the strong differential.

    Starts from an unrestricted optimum (oracle when small enough), then keeps
    adding the lowest undominated vertex. The result is re-verified and the
    restricted search is used if augmentation ever lost optimality.
    """
    cfg = cfg or SolverConfig()
    primary = strong_differential(g, cfg)
    if g.n > SUBSET_LIMIT:
        return primary.witness
    d = oracle(g, Invariant.STRONG_DIFFERENTIAL).witness.mask
    while True:
        missing = g.full & ~(d | neighborhood_mask(g, d))
        if not missing:
            break
        d |= missing & -missing
    if strong_differential_of(g, d) != primary.value or not is_dominating(g, d):
        return primary.witness
    return VertexSet(g.n, d)


def verify_witness(g: Graph, result: InvariantResult) -> bool:
    """Independently re-check that the witness is feasible and attains the value."""
    inv, w = result.invariant, result.witness
    if inv.uses_weights:
        check = is_idf if inv is Invariant.ITALIAN_DOMINATION else is_rdf
        return isinstance(w, WeightFunction) and check(g, w) and w.weight == result.value
    if not isinstance(w, VertexSet):
        return False
    s = w.mask
    if inv is Invariant.STRONG_DIFFERENTIAL:
        ok = strong_differential_of(g, s) == result.value
        return ok and (result.method is Method.BRUTE_FORCE or is_dominating(g, s))
    if inv is Invariant.DIFFERENTIAL:
        return differential_of(g, s) == result.value
    predicate = {
        Invariant.DOMINATION: is_dominating,
        Invariant.TWO_DOMINATION: is_2_dominating,
        Invariant.SEMITOTAL_DOMINATION: is_semitotal_dominating,
        Invariant.INDEPENDENCE: is_independent,
        Invariant.VERTEX_COVER: is_vertex_cover,
    }[inv]
    return predicate(g, w) and len(w) == result.value


__all__ = [
    "Invariant",
    "Method",
    "InvariantResult",
    "SolverConfig",
    "solve",
    "oracle",
    "strong_differential",
    "strong_differential_oracle",
    "differential",
    "domination_number",
    "two_domination_number",
    "semitotal_domination_number",
    "independence_number",
    "vertex_cover_number",
    "roman_domination_number",
    "italian_domination_number",
    "gallai_derived",
    "dominating_strong_witness",
    "verify_witness",
]
