"""The executable theorem registry.

Each entry pairs a hypothesis (a graph predicate) with a claim evaluated on a
:class:`GraphProfile`. Claims about "some optimal set" or "every minimum
dominating set" are decided over the full subset table, so they need
``n <= cfg.strict_guard``; above it they are reported Inconclusive unless a
witness already settles them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

import numpy as np

from ..errors import UnknownTheorem
from ..families.membership import corona_decomposition, is_family_G, is_family_T
from ..graph import Graph, WeightFunction, breakdown
from ..solvers import Invariant, SolverConfig
from .profile import GraphProfile

Number = Union[int, Fraction]


class ClaimKind(str, enum.Enum):
    IDENTITY = "identity"
    INEQUALITY = "inequality"
    IFF = "iff"
    IMPLICATION = "implication"


class Status(str, enum.Enum):
    HOLDS = "Holds"
    HYPOTHESIS_NOT_MET = "HypothesisNotMet"
    VIOLATED = "VIOLATED"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    """What a claim evaluator returns; ``holds=None`` means undecidable here."""

    holds: Optional[bool]
    lhs: Optional[Number] = None
    rhs: Optional[Number] = None
    detail: str = ""
    direction: Optional[str] = None
    evidence: dict[str, tuple[int, ...]] = field(default_factory=dict)


@dataclass(frozen=True)
class Counterexample:
    """A violating graph plus every computed value and witness.

    Set witnesses are sorted vertex tuples; weight-function witnesses are the
    full weight vector. ``evidence`` holds extra sets named by the check.
    """

    graph: Graph
    values: dict[str, int]
    witnesses: dict[str, tuple[int, ...]]
    evidence: dict[str, tuple[int, ...]] = field(default_factory=dict)


@dataclass(frozen=True)
class CheckOutcome:
    id: str
    status: Status
    lhs: Optional[Number] = None
    rhs: Optional[Number] = None
    detail: str = ""
    direction: Optional[str] = None
    counterexample: Optional[Counterexample] = None


Hypothesis = Callable[[GraphProfile], Optional[bool]]
Claim = Callable[[GraphProfile], Verdict]


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    group: str
    claim_kind: ClaimKind
    description: str
    hypothesis: Hypothesis = field(compare=False, repr=False)
    claim: Claim = field(compare=False, repr=False)
    hypothesis_text: str = "any graph"


# -- verdict helpers -----------------------------------------------------------


def _eq(lhs: Number, rhs: Number, detail: str = "") -> Verdict:
    return Verdict(lhs == rhs, lhs, rhs, detail)


def _le(lhs: Number, rhs: Number, detail: str = "") -> Verdict:
    return Verdict(lhs <= rhs, lhs, rhs, detail)


def _ge(lhs: Number, rhs: Number, detail: str = "") -> Verdict:
    return Verdict(lhs >= rhs, lhs, rhs, detail)


def _between(low: Number, mid: Number, high: Number, detail: str = "") -> Verdict:
    text = f"lower={low}" + (f", {detail}" if detail else "")
    return Verdict(low <= mid <= high, mid, high, text)


def _iff(left: Optional[bool], right: Optional[bool], lname: str, rname: str,
         lhs: Optional[Number] = None, rhs: Optional[Number] = None,
         evidence: Optional[dict[str, tuple[int, ...]]] = None) -> Verdict:
    detail = f"[{lname}]={left}, [{rname}]={right}"
    if left is None or right is None:
        return Verdict(None, lhs, rhs, detail + " (needs exhaustive enumeration)")
    direction = None
    if left and not right:
        direction = f"[{lname}] => [{rname}]"
    elif right and not left:
        direction = f"[{rname}] => [{lname}]"
    return Verdict(left == right, lhs, rhs, detail, direction, evidence or {})


def _members(p: GraphProfile, row: int) -> tuple[int, ...]:
    return tuple(int(v) for v in np.flatnonzero(p.table.members[row]))


def _any(_: GraphProfile) -> bool:
    return True


def _n3(p: GraphProfile) -> bool:
    return p.n >= 3


def _connected_n3(p: GraphProfile) -> bool:
    return p.connected and p.n >= 3


def _connected_delta2(p: GraphProfile) -> bool:
    return p.connected and p.min_degree >= 2


def _connected_delta3(p: GraphProfile) -> bool:
    return p.connected and p.min_degree >= 3


def _delta2(p: GraphProfile) -> bool:
    return p.min_degree >= 2


def _no_isolated(p: GraphProfile) -> bool:
    return p.min_degree >= 1


def _tree(p: GraphProfile) -> bool:
    return p.tree


def _nontrivial_tree(p: GraphProfile) -> bool:
    return p.tree and p.n >= 2


def _tree_n3(p: GraphProfile) -> bool:
    return p.tree and p.n >= 3


# -- claims needing exhaustive enumeration --------------------------------------


def _lemma_dominating(p: GraphProfile) -> Verdict:
    if not p.exhaustive:
        return Verdict(None, detail="needs exhaustive enumeration")
    t = p.table
    best_all = int(t.strong_differential.max())
    best_dom = int(t.strong_differential[t.dominating].max())
    return _eq(best_dom, best_all, "lhs=max over dominating sets, rhs=max over all subsets")


def _remark_formula(p: GraphProfile) -> Verdict:
    if not p.exhaustive:
        return Verdict(None, detail="needs exhaustive enumeration")
    t = p.table
    rows = p.optimal_ds_rows[t.dominating[p.optimal_ds_rows]]
    formula = p.n - t.size[rows] - t.weak[rows]
    bad = rows[formula != p.ds]
    if len(bad):
        row = int(bad[0])
        return Verdict(False, p.ds, int(p.n - t.size[row] - t.weak[row]),
                       f"checked {len(rows)} dominating optimal sets",
                       evidence={"dominating-optimal-set": _members(p, row)})
    return Verdict(True, p.ds, p.ds, f"checked {len(rows)} dominating optimal sets")


def _exists_dominating_no_weak(p: GraphProfile) -> tuple[Optional[bool], dict]:
    if p.exhaustive:
        t = p.table
        rows = p.optimal_ds_rows
        hit = rows[t.dominating[rows] & (t.weak[rows] == 0)]
        return (len(hit) > 0, {"dominating-optimal-set": _members(p, int(hit[0]))} if len(hit) else {})
    bd = p.result(Invariant.STRONG_DIFFERENTIAL).breakdown
    return (True, {"dominating-optimal-set": tuple(bd.set.sorted())}) if not bd.weak else (None, {})


def _iff_gamma2_witness(p: GraphProfile) -> Verdict:
    right, ev = _exists_dominating_no_weak(p)
    return _iff(p.ds == p.n - p.gamma2, right, "ds = n - gamma2",
                "some dominating optimal set has no weak member", p.ds, p.n - p.gamma2, ev)


def _every_gamma_set_strongless_optimal(p: GraphProfile) -> tuple[Optional[bool], dict]:
    if not p.exhaustive:
        return None, {}
    t = p.table
    rows = p.gamma_rows
    good = (t.strong_differential[rows] == p.ds) & (t.size[rows] == t.weak[rows])
    if good.all():
        return True, {}
    return False, {"gamma-set": _members(p, int(rows[np.argmin(good)]))}


def _iff_2gamma(p: GraphProfile) -> Verdict:
    right, ev = _every_gamma_set_strongless_optimal(p)
    return _iff(p.ds == p.n - 2 * p.gamma, right, "ds = n - 2 gamma",
                "every minimum dominating set is optimal with no strong member",
                p.ds, p.n - 2 * p.gamma, ev)


def _some_gamma_set_has_strong(p: GraphProfile) -> Optional[bool]:
    if p.exhaustive:
        t = p.table
        rows = p.gamma_rows
        return bool((t.size[rows] > t.weak[rows]).any())
    witness = p.result(Invariant.DOMINATION).witness
    return True if breakdown(p.g, witness).strong else None


def _iff_equal_differentials(p: GraphProfile) -> Verdict:
    right: Optional[bool]
    ev: dict = {}
    if p.exhaustive:
        t = p.table
        rows = p.optimal_ds_rows
        hit = rows[t.size[rows] == t.weak[rows]]
        right = len(hit) > 0
        if right:
            ev = {"optimal-set": _members(p, int(hit[0]))}
    else:
        bd = p.result(Invariant.STRONG_DIFFERENTIAL).breakdown
        right = True if not bd.strong else None
    return _iff(p.ds == p.diff, right, "ds = differential",
                "some optimal set has no strong member", p.ds, p.diff, ev)


def _lemma_T_weak(p: GraphProfile) -> Verdict:
    if not p.exhaustive:
        return Verdict(None, detail="needs exhaustive enumeration")
    t = p.table
    rows = p.optimal_ds_rows
    delta = p.max_degree
    for v in range(p.n):
        if p.g.degree(v) == delta and not t.weak_members[rows, v].any():
            return Verdict(False, v, None, f"no optimal set has vertex {v} as a weak member")
    return Verdict(True, detail=f"checked every vertex of degree {delta}")


def _tree_family_T(p: GraphProfile) -> Verdict:
    return _iff(p.ds == p.max_degree - 1, is_family_T(p.g), "ds = max degree - 1",
                "T in family T", p.ds, p.max_degree - 1)


# -- structural claims -----------------------------------------------------------


def _trivial_iii_shape(g: Graph) -> bool:
    active = [h for h in (g.induced(c)[0] for c in g.components()) if h.max_degree >= 2]
    if len(active) != 1:
        return False
    h = active[0]
    # connected with max degree 2: three vertices gives P3 or C3, four gives P4 when acyclic
    return h.max_degree == 2 and (h.n == 3 or (h.n == 4 and h.is_tree()))


def _trivial_v_right(p: GraphProfile) -> bool:
    n, d, g2 = p.n, p.max_degree, p.gamma2
    return (g2 == 3 and d <= n - 2) or (g2 > 3 and d == n - 2)


def _corona_hyp(p: GraphProfile) -> bool:
    return corona_decomposition(p.g) is not None


def _corona_claim(p: GraphProfile) -> Verdict:
    core, n2 = corona_decomposition(p.g)
    target = core.bit_count() * (n2 - 1)
    ok = p.ds == target and p.diff == target
    return Verdict(ok, p.ds, target, f"differential={p.diff}, n1={core.bit_count()}, n2={n2}")


def _family_G_claim(p: GraphProfile) -> Verdict:
    values = {p.ds, p.diff, p.n - 2 * p.gamma, p.n - p.gamma - p.sigma}
    return Verdict(len(values) == 1, p.ds, p.n - 2 * p.gamma,
                   f"differential={p.diff}, n-gamma-sigma={p.n - p.gamma - p.sigma}")


def _order(n: int, den: int) -> Fraction:
    return Fraction(n, den)


def _table_maxdeg(p: GraphProfile) -> Verdict:
    d2 = p.max_degree + 2
    return _iff(p.gamma_i * d2 == 2 * p.n, p.gamma2 * d2 == 2 * p.n,
                "gammaI = 2n/(max degree+2)", "gamma2 = 2n/(max degree+2)",
                p.gamma_i, Fraction(2 * p.n, d2))


def _iff_maxdeg(p: GraphProfile) -> Verdict:
    d = p.max_degree
    return _iff(p.ds * (d + 2) == p.n * d, p.gamma2 * (d + 2) == 2 * p.n,
                "ds = n maxdeg/(maxdeg+2)", "gamma2 = 2n/(maxdeg+2)",
                p.ds, Fraction(p.n * d, d + 2))


def _c(id_: str, group: str, kind: ClaimKind, desc: str, hyp: Hypothesis, claim: Claim,
       hyp_text: str = "any graph") -> TheoremCheck:
    return TheoremCheck(id_, group, kind, desc, hyp, claim, hyp_text)


I, Q, F, M = ClaimKind.IDENTITY, ClaimKind.INEQUALITY, ClaimKind.IFF, ClaimKind.IMPLICATION


def _build() -> list[TheoremCheck]:
    checks = [
        _c("gallai-independence", "gallai-independence", I, "alpha + beta = n", _any,
           lambda p: _eq(p.alpha + p.beta, p.n, f"alpha={p.alpha}, beta={p.beta}")),
        _c("gallai-roman", "gallai-roman", I, "gammaR + differential = n", _any,
           lambda p: _eq(p.gamma_r + p.diff, p.n, f"gammaR={p.gamma_r}, differential={p.diff}")),
        _c("gallai-italian", "gallai-italian", I, "gammaI + ds = n", _any,
           lambda p: _eq(p.gamma_i + p.ds, p.n, f"gammaI={p.gamma_i}, ds={p.ds}")),
        _c("lemma-dominating-ds-set", "lemma-dominating-ds-set", M,
           "some optimal strong-differential set is dominating", _any, _lemma_dominating),
        _c("remark-ds-formula", "remark-ds-formula", I,
           "every dominating optimal set D has ds = n - |D| - |Dw|", _any, _remark_formula),
        _c("order-quarter", "order", Q, "ds >= n/4", _connected_n3,
           lambda p: _ge(p.ds, _order(p.n, 4)), "connected, n >= 3"),
        _c("order-third", "order", Q, "ds >= n/3", _connected_delta2,
           lambda p: _ge(p.ds, _order(p.n, 3)), "connected, min degree >= 2"),
        _c("order-half", "order", Q, "ds >= n/2", _connected_delta3,
           lambda p: _ge(p.ds, _order(p.n, 2)), "connected, min degree >= 3"),
        _c("italian-basics-tree", "italian-basics", Q, "gammaI >= gamma + 1", _nontrivial_tree,
           lambda p: _ge(p.gamma_i, p.gamma + 1), "tree, n >= 2"),
        _c("italian-basics-roman", "italian-basics", Q, "gammaI <= gammaR <= 2 gamma", _any,
           lambda p: Verdict(p.gamma_i <= p.gamma_r <= 2 * p.gamma, p.gamma_i, p.gamma_r,
                             f"2gamma={2 * p.gamma}")),
        _c("italian-basics-gamma2", "italian-basics", Q, "gammaI <= gamma2", _any,
           lambda p: _le(p.gamma_i, p.gamma2)),
        _c("sandwich-sigma", "sandwich-sigma", Q, "n - min(2 gamma, gamma2) <= ds <= n - gamma - sigma",
           _any, lambda p: _between(p.n - min(2 * p.gamma, p.gamma2), p.ds, p.n - p.gamma - p.sigma)),
        _c("iff-gamma", "iff-gamma", F, "ds = n - gamma iff gamma2 = gamma", _any,
           lambda p: _iff(p.ds == p.n - p.gamma, p.gamma2 == p.gamma, "ds = n - gamma",
                          "gamma2 = gamma", p.ds, p.n - p.gamma)),
        _c("iff-gamma2-witness", "iff-gamma2-witness", F,
           "ds = n - gamma2 iff some dominating optimal set has Dw empty", _any, _iff_gamma2_witness),
        _c("iff-2gamma", "iff-2gamma", F,
           "ds = n - 2 gamma iff every minimum dominating set is optimal with Ds empty", _any, _iff_2gamma),
        _c("strict-gamma-set", "strict-gamma-set", M,
           "a minimum dominating set with Ds nonempty forces ds >= n - 2 gamma + 1",
           _some_gamma_set_has_strong, lambda p: _ge(p.ds, p.n - 2 * p.gamma + 1),
           "some minimum dominating set has a strong member"),
        _c("half-n-minus-gamma", "half-n-minus-gamma", Q, "ds >= (n - gamma)/2", _delta2,
           lambda p: _ge(p.ds, Fraction(p.n - p.gamma, 2)), "min degree >= 2"),
        _c("corona", "corona", I, "ds and differential of G1 corona G2 equal n1 (n2 - 1)",
           _corona_hyp, _corona_claim, "corona of any G1 with a nontrivial G2"),
        _c("diff-sandwich", "diff-sandwich", Q, "differential <= ds <= differential + gamma - 1", _any,
           lambda p: _between(p.diff, p.ds, p.diff + p.gamma - 1)),
        _c("iff-equal-differentials", "iff-equal-differentials", F,
           "ds = differential iff some optimal set has Ds empty", _any, _iff_equal_differentials),
        _c("tree-3-4-roman", "tree-3-4-roman", Q, "gammaI >= 3 gammaR / 4", _tree,
           lambda p: _ge(p.gamma_i, Fraction(3 * p.gamma_r, 4)), "tree"),
        _c("tree-floor-bound", "tree-floor-bound", Q, "ds <= floor((n + 3 differential)/4)", _tree,
           lambda p: _le(p.ds, (p.n + 3 * p.diff) // 4), "tree"),
        _c("maxdeg-sandwich", "maxdeg-sandwich", Q, "maxdeg - 1 <= ds <= n maxdeg/(maxdeg + 2)", _any,
           lambda p: _between(p.max_degree - 1, p.ds, Fraction(p.n * p.max_degree, p.max_degree + 2))),
        _c("iff-maxdeg", "iff-maxdeg", F, "ds = n maxdeg/(maxdeg+2) iff gamma2 = 2n/(maxdeg+2)",
           _any, _iff_maxdeg),
        _c("lemma-T-weak-witness", "lemma-T-weak-witness", M,
           "for T in family T and every max-degree v, some optimal set has v weak",
           lambda p: p.tree and p.n >= 3 and is_family_T(p.g), _lemma_T_weak, "tree in family T"),
        _c("tree-family-T", "tree-family-T", F, "ds = maxdeg - 1 iff T in family T", _tree_n3,
           _tree_family_T, "tree, n >= 3"),
        _c("alpha-lower", "alpha-lower", Q, "ds >= alpha", _delta2,
           lambda p: _ge(p.ds, p.alpha), "min degree >= 2"),
        _c("half-beta", "half-beta", Q, "ds >= beta/2", lambda p: p.components_active,
           lambda p: _ge(p.ds, Fraction(p.beta, 2)), "every component has max degree >= 2"),
        _c("domchain", "domchain", Q, "gamma <= gammat2 <= gamma2", _no_isolated,
           lambda p: Verdict(p.gamma <= p.gamma_t2 <= p.gamma2, p.gamma_t2, p.gamma2,
                             f"gamma={p.gamma}"), "no isolated vertices"),
        _c("semitotal-upper", "semitotal-upper", Q, "ds <= n - gammat2", _no_isolated,
           lambda p: _le(p.ds, p.n - p.gamma_t2), "no isolated vertices"),
        _c("semitotal-eq", "semitotal-eq", M, "gammat2 = gamma2 implies ds = n - gamma2",
           lambda p: p.min_degree >= 1 and p.gamma_t2 == p.gamma2,
           lambda p: _eq(p.ds, p.n - p.gamma2), "no isolated vertices and gammat2 = gamma2"),
        _c("trivial-i", "trivial", Q, "0 <= ds <= n - 2", _n3,
           lambda p: _between(0, p.ds, p.n - 2), "n >= 3"),
        _c("trivial-ii", "trivial", F, "ds = 0 iff maxdeg <= 1", _any,
           lambda p: _iff(p.ds == 0, p.max_degree <= 1, "ds = 0", "maxdeg <= 1", p.ds, 0),
           "any graph (n >= 1)"),
        _c("trivial-iii", "trivial", F,
           "ds = 1 iff G is C3, P3 or P4 plus components of max degree <= 1", _n3,
           lambda p: _iff(p.ds == 1, _trivial_iii_shape(p.g), "ds = 1", "shape", p.ds, 1), "n >= 3"),
        _c("trivial-iv", "trivial", F, "ds = n - 2 iff maxdeg = n - 1 or gamma2 = 2", _n3,
           lambda p: _iff(p.ds == p.n - 2, p.max_degree == p.n - 1 or p.gamma2 == 2,
                          "ds = n - 2", "maxdeg = n - 1 or gamma2 = 2", p.ds, p.n - 2), "n >= 3"),
        _c("trivial-v", "trivial", F,
           "ds = n - 3 iff (gamma2 = 3 and maxdeg <= n - 2) or (gamma2 > 3 and maxdeg = n - 2)", _n3,
           lambda p: _iff(p.ds == p.n - 3, _trivial_v_right(p), "ds = n - 3", "gamma2/maxdeg condition",
                          p.ds, p.n - 3), "n >= 3"),
        # the nine Italian-domination consequences, each through gammaI + ds = n
        _c("table-gamma-sigma", "concluding-table", Q, "gammaI >= gamma + sigma", _any,
           lambda p: _ge(p.gamma_i, p.gamma + p.sigma)),
        _c("table-iff-gamma", "concluding-table", F, "gammaI = gamma iff gamma2 = gamma", _any,
           lambda p: _iff(p.gamma_i == p.gamma, p.gamma2 == p.gamma, "gammaI = gamma",
                          "gamma2 = gamma", p.gamma_i, p.gamma)),
        _c("table-half-n-plus-gamma", "concluding-table", Q, "gammaI <= (n + gamma)/2", _delta2,
           lambda p: _le(p.gamma_i, Fraction(p.n + p.gamma, 2)), "min degree >= 2"),
        _c("table-roman-gamma", "concluding-table", Q, "gammaI >= gammaR - gamma + 1", _any,
           lambda p: _ge(p.gamma_i, p.gamma_r - p.gamma + 1)),
        _c("table-iff-maxdeg", "concluding-table", F,
           "gammaI = 2n/(maxdeg+2) iff gamma2 = 2n/(maxdeg+2)", _any, _table_maxdeg),
        _c("table-cover", "concluding-table", Q, "gammaI <= beta", _delta2,
           lambda p: _le(p.gamma_i, p.beta), "min degree >= 2"),
        _c("table-half-beta", "concluding-table", Q, "gammaI <= n - beta/2",
           lambda p: p.components_active, lambda p: _le(p.gamma_i, p.n - Fraction(p.beta, 2)),
           "every component has max degree >= 2"),
        _c("table-semitotal", "concluding-table", Q, "gammaI >= gammat2", _no_isolated,
           lambda p: _ge(p.gamma_i, p.gamma_t2), "min degree >= 1"),
        _c("table-semitotal-eq", "concluding-table", M, "gammat2 = gamma2 implies gammaI = gamma2",
           lambda p: p.min_degree >= 1 and p.gamma_t2 == p.gamma2,
           lambda p: _eq(p.gamma_i, p.gamma2), "min degree >= 1 and gammat2 = gamma2"),
        # consequences stated alongside the main results
        _c("cor-gamma2-equals-gamma", "cor-gamma2-equals-gamma", M, "gamma2 = gamma implies ds = n - gamma2",
           lambda p: p.gamma2 == p.gamma, lambda p: _eq(p.ds, p.n - p.gamma2), "gamma2 = gamma"),
        _c("remark-family-G", "remark-family-G", I, "ds = differential = n - 2 gamma = n - gamma - sigma",
           lambda p: is_family_G(p.g), _family_G_claim, "G in family G"),
        _c("diff-lower-gamma", "diff-lower-gamma", Q, "differential >= n - 2 gamma", _any,
           lambda p: _ge(p.diff, p.n - 2 * p.gamma)),
    ]
    return checks


_REGISTRY: list[TheoremCheck] = _build()
_BY_ID = {c.id: c for c in _REGISTRY}
assert len(_BY_ID) == len(_REGISTRY), "duplicate theorem id"


def registry() -> list[TheoremCheck]:
    return list(_REGISTRY)


def get_check(check_id: str) -> TheoremCheck:
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise UnknownTheorem(check_id) from None


def resolve_ids(spec: str | list[str] | None) -> list[TheoremCheck]:
    """``None``, ``"all"`` or a comma list of ids or group names."""
    if spec is None or spec == "all":
        return registry()
    names = spec.split(",") if isinstance(spec, str) else list(spec)
    out: list[TheoremCheck] = []
    for name in (s.strip() for s in names):
        if name in _BY_ID:
            out.append(_BY_ID[name])
            continue
        group = [c for c in _REGISTRY if c.group == name]
        if not group:
            raise UnknownTheorem(name)
        out.extend(group)
    return out


def _counterexample(p: GraphProfile, verdict: Verdict) -> Counterexample:
    values, witnesses = {}, {}
    for inv, res in p.results.items():
        values[inv.value] = res.value
        w = res.witness
        witnesses[inv.value] = w.weights if isinstance(w, WeightFunction) else tuple(w.sorted())
    return Counterexample(p.g, values, witnesses, dict(verdict.evidence))


def evaluate(chk: TheoremCheck, profile: GraphProfile) -> CheckOutcome:
    hyp = chk.hypothesis(profile)
    if hyp is None:
        return CheckOutcome(chk.id, Status.INCONCLUSIVE, detail="hypothesis needs exhaustive enumeration")
    if not hyp:
        return CheckOutcome(chk.id, Status.HYPOTHESIS_NOT_MET, detail=chk.hypothesis_text)
    v = chk.claim(profile)
    if v.holds is None:
        return CheckOutcome(chk.id, Status.INCONCLUSIVE, v.lhs, v.rhs, v.detail)
    if v.holds:
        return CheckOutcome(chk.id, Status.HOLDS, v.lhs, v.rhs, v.detail)
    return CheckOutcome(chk.id, Status.VIOLATED, v.lhs, v.rhs, v.detail, v.direction,
                        _counterexample(profile, v))


def check(g: Graph, check_id: str, cfg: SolverConfig | None = None) -> CheckOutcome:
    """Evaluate one registry entry on ``g``."""
    chk = get_check(check_id)
    return evaluate(chk, GraphProfile(g, cfg))


def literal_table_readings() -> list[TheoremCheck]:
    """The two concluding-table rows as printed, kept outside the registry.

    Read literally they contradict the identity gammaI + ds = n applied to the
    bounds they are derived from; the registry carries the corrected forms
    ``table-cover`` and ``table-half-beta``. These exist so the discrepancy
    can be demonstrated on concrete graphs.
    """
    return [
        _c("table-cover-literal", "concluding-table-literal", Q, "gammaI <= alpha", _delta2,
           lambda p: _le(p.gamma_i, p.alpha), "min degree >= 2"),
        _c("table-half-beta-literal", "concluding-table-literal", Q, "gammaI <= beta/2", _connected_n3,
           lambda p: _le(p.gamma_i, Fraction(p.beta, 2)), "connected, n >= 3"),
    ]
