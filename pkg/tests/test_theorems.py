from __future__ import annotations

import itertools

import pytest

from strongdiff.errors import UnknownTheorem
from strongdiff.families import (
    canonical_form,
    complete_bipartite,
    connected_graphs,
    cycle,
    expand,
    figure_a,
    figure_b,
    path,
    random_gnp,
)
from strongdiff.graph import Graph, VertexSet, WeightFunction, breakdown, is_dominating
from strongdiff.solvers import (
    Invariant,
    InvariantResult,
    SolverConfig,
    solve,
    strong_differential,
    verify_witness,
)
from strongdiff.theorems import (
    ClaimKind,
    GraphProfile,
    Status,
    TheoremCheck,
    Verdict,
    check,
    evaluate,
    fuzz,
    get_check,
    literal_table_readings,
    registry,
    resolve_ids,
)


def _false_check() -> TheoremCheck:
    return TheoremCheck("inject-ds-equals-n", "inject", ClaimKind.IDENTITY, "ds = n",
                        lambda p: True, lambda p: Verdict(p.ds == p.n, p.ds, p.n))


def _recheck(cx) -> None:
    """Recompute every value in a counterexample and validate its witnesses."""
    g = cx.graph
    for name, value in cx.values.items():
        inv = Invariant(name)
        assert solve(g, inv).value == value
        raw = cx.witnesses[name]
        if inv in (Invariant.ITALIAN_DOMINATION, Invariant.ROMAN_DOMINATION):
            res = InvariantResult(inv, value, WeightFunction(raw), solve(g, inv).method)
        else:
            s = VertexSet.of(g.n, raw)
            res = InvariantResult(inv, value, s, solve(g, inv).method, breakdown(g, s))
        assert verify_witness(g, res)


class TestRegistry:
    def test_size_and_unique_ids(self):
        checks = registry()
        assert len({c.group for c in checks}) >= 29
        assert len({c.id for c in checks}) == len(checks)

    def test_unknown(self):
        with pytest.raises(UnknownTheorem):
            get_check("no-such-check")
        with pytest.raises(UnknownTheorem):
            check(path(3), "no-such-check")

    def test_resolve_groups(self):
        ids = [c.id for c in resolve_ids("concluding-table")]
        assert len(ids) == 9 and all(i.startswith("table-") for i in ids)
        assert [c.id for c in resolve_ids("gallai-roman,corona")] == ["gallai-roman", "corona"]
        assert len(resolve_ids("all")) == len(registry())

    def test_iff_checks_declared(self):
        kinds = {c.id: c.claim_kind for c in registry()}
        assert kinds["iff-gamma"] is ClaimKind.IFF
        assert kinds["tree-family-T"] is ClaimKind.IFF


class TestWorkedExamples:
    def test_gallai_italian_figure_a(self):
        out = check(figure_a(), "gallai-italian")
        assert out.status is Status.HOLDS
        assert (out.lhs, out.rhs) == (6 + 8, 14)

    def test_iff_gamma_figure_b(self):
        out = check(figure_b(), "iff-gamma")
        assert out.status is Status.HOLDS
        assert "False" in out.detail and "True" not in out.detail

    def test_diff_sandwich_k23_tight(self):
        out = check(complete_bipartite(2, 3), "diff-sandwich")
        assert out.status is Status.HOLDS and out.lhs == out.rhs == 3

    def test_order_quarter_p7(self):
        out = check(path(7), "order-quarter")
        assert out.status is Status.HOLDS
        assert out.lhs == strong_differential(path(7)).value == 3

    def test_order_quarter_k1(self):
        assert check(Graph(1), "order-quarter").status is Status.HYPOTHESIS_NOT_MET

    def test_trivial_ii_two_k2(self):
        out = check(Graph(4, [(0, 1), (2, 3)]), "trivial-ii")
        assert out.status is Status.HOLDS

    def test_semitotal_eq_figure_a(self):
        assert check(figure_a(), "semitotal-eq").status in (Status.HOLDS, Status.HYPOTHESIS_NOT_MET)
        assert check(figure_a(), "semitotal-upper").status is Status.HOLDS


class TestHarness:
    def test_injected_false_check(self):
        stream = [Graph(1), Graph(2), path(3), cycle(4)]
        report = fuzz(stream, checks=[_false_check()])
        _, first = report.violations[0]
        # every graph with at least one vertex violates ds = n
        assert report.total(Status.VIOLATED) == 4
        assert first.status is Status.VIOLATED and first.counterexample is not None
        sources = [s for s, _ in report.violations]
        assert "graph#2" in sources
        for _, outcome in report.violations:
            _recheck(outcome.counterexample)

    def test_injected_check_first_nontrivial_graph(self):
        report = fuzz(expand("gnp:n=3..8,p=0.5,count=30,seed=5"), checks=[_false_check()])
        _, first = report.violations[0]
        assert first.counterexample.graph.n >= 3
        _recheck(first.counterexample)
        assert not report.ok

    def test_iff_direction_named(self):
        # a false iff: [ds = 0] <=> [n is even]
        from strongdiff.theorems.registry import _iff

        chk = TheoremCheck("inject-iff", "inject", ClaimKind.IFF, "ds = 0 iff n even", lambda p: True,
                           lambda p: _iff(p.ds == 0, p.n % 2 == 0, "ds = 0", "n even"))
        assert evaluate(chk, GraphProfile(path(3))).status is Status.HOLDS
        out = evaluate(chk, GraphProfile(Graph(1)))
        assert out.status is Status.VIOLATED
        assert out.direction == "[ds = 0] => [n even]"
        out = evaluate(chk, GraphProfile(path(4)))
        assert out.direction == "[n even] => [ds = 0]"

    def test_inconclusive_above_strict_guard(self):
        cfg = SolverConfig(strict_guard=4)
        out = check(cycle(5), "remark-ds-formula", cfg)
        assert out.status is Status.INCONCLUSIVE
        assert check(cycle(5), "remark-ds-formula").status is Status.HOLDS

    def test_inconclusive_is_never_counted_as_holds(self):
        cfg = SolverConfig(strict_guard=3)
        report = fuzz([cycle(5), path(6)], ids="lemma-dominating-ds-set", cfg=cfg)
        assert report.counts["lemma-dominating-ds-set"]["Holds"] == 0
        assert len(report.inconclusive) == 2

    def test_budget(self):
        report = fuzz(expand("gnp:n=5,p=0.5,count=10,seed=1"), ids="gallai-roman", budget=3)
        assert report.graphs == 3


class TestExhaustiveStatements:
    def test_remark_formula_all_dominating_optimal_sets(self):
        # every dominating ds-set D satisfies ds = n - |D| - |Dw|
        checked = 0
        for seed in range(40):
            g = random_gnp(8, 0.35, seed)
            ds = strong_differential(g).value
            for r in range(g.n + 1):
                for d in itertools.combinations(range(g.n), r):
                    if not is_dominating(g, d):
                        continue
                    bd = breakdown(g, d)
                    if bd.strong_differential == ds:
                        assert ds == g.n - len(bd.set) - len(bd.weak)
                        checked += 1
            assert check(g, "remark-ds-formula").status is Status.HOLDS
        assert checked > 40

    def test_trivial_iii_connected_set(self):
        found = []
        for n in range(3, 7):
            for g in connected_graphs(n):
                if strong_differential(g).value == 1:
                    found.append(g)
        assert {canonical_form(g) for g in found} == {canonical_form(h) for h in (cycle(3), path(3), path(4))}
        assert len(found) == 3

    def test_literal_table_rows_fail(self):
        cover, half_beta = literal_table_readings()
        assert evaluate(cover, GraphProfile(cycle(3))).status is Status.VIOLATED
        assert evaluate(half_beta, GraphProfile(path(3))).status is Status.VIOLATED
        assert check(cycle(3), "table-cover").status is Status.HOLDS
        assert check(path(3), "table-half-beta").status is Status.HOLDS


class TestFuzzRuns:
    def test_trees(self):
        report = fuzz(expand("trees:n=3..9"), ids="tree-family-T,tree-floor-bound,tree-3-4-roman")
        assert report.ok and report.total(Status.HOLDS) > 0

    def test_coronas(self):
        specs = [f"corona({a},{b})" for a in ("path:1", "path:2", "path:3", "cycle:3", "path:4")
                 for b in ("complete:2", "path:3", "cycle:3")]
        report = fuzz(specs, ids="corona")
        assert report.ok and report.counts["corona"]["Holds"] == 15

    def test_gnp_all(self):
        report = fuzz(expand("gnp:n=3..10,p=0.3/0.5,count=60,seed=17"))
        assert report.ok and not report.inconclusive
        assert report.witnesses_checked > 0
