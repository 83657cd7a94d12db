from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import given

from conftest import graphs, graphs_with_set, trees
from strongdiff.graph import (
    Graph,
    breakdown,
    external_neighborhood,
    external_private_neighborhood,
    is_2_dominating,
    is_dominating,
    is_semitotal_dominating,
    is_vertex_cover,
)
from strongdiff.io import parse_edgelist, parse_graph6, write_edgelist, write_graph6
from strongdiff.solvers import (
    Invariant,
    differential,
    italian_domination_number,
    oracle,
    roman_domination_number,
    solve,
    strong_differential,
    verify_witness,
)


@given(graphs_with_set())
def test_breakdown_identities(case):
    g, mask = case
    bd = breakdown(g, mask)
    assert bd.weak.mask | bd.strong.mask == mask
    assert bd.weak.mask & bd.strong.mask == 0
    assert bd.external.mask & mask == 0
    assert bd.strong_differential == bd.differential + len(bd.strong)
    assert bd.strong_differential >= bd.differential


@given(graphs_with_set())
def test_private_neighbours_have_a_unique_dominator(case):
    g, mask = case
    members = [v for v in range(g.n) if mask >> v & 1]
    ext = external_neighborhood(g, mask)
    owners: dict[int, int] = {}
    for v in members:
        for u in external_private_neighborhood(g, v, mask):
            assert u in ext and u not in owners
            owners[u] = v
            assert (g.adj[u] & mask) == 1 << v


@given(graphs(min_n=1, max_n=9))
def test_optimum_ordering(g):
    assert strong_differential(g).value >= differential(g).value >= 0


@given(graphs_with_set(max_n=8))
def test_predicate_chain(case):
    g, mask = case
    if is_2_dominating(g, mask):
        assert is_dominating(g, mask)
    if g.n and g.min_degree >= 2 and is_vertex_cover(g, mask):
        # complement is independent, each outside vertex sees >= 2 cover vertices
        assert is_2_dominating(g, mask)


@given(graphs_with_set(max_n=8))
def test_semitotal_implies_dominating(case):
    g, mask = case
    if g.n and not g.has_isolated_vertex() and is_semitotal_dominating(g, mask):
        assert is_dominating(g, mask)


@given(graphs(min_n=1, max_n=9))
def test_gallai_identities(g):
    assert italian_domination_number(g).value + strong_differential(g).value == g.n
    assert roman_domination_number(g).value + differential(g).value == g.n
    assert solve(g, Invariant.INDEPENDENCE).value + solve(g, Invariant.VERTEX_COVER).value == g.n


@given(graphs(min_n=1, max_n=8))
def test_matches_oracle_with_valid_witnesses(g):
    for inv in Invariant:
        if inv is Invariant.SEMITOTAL_DOMINATION and g.has_isolated_vertex():
            continue
        res = solve(g, inv)
        assert res.value == oracle(g, inv).value
        assert verify_witness(g, res)


@given(graphs(min_n=1, max_n=9))
def test_deterministic(g):
    for inv in (Invariant.STRONG_DIFFERENTIAL, Invariant.ITALIAN_DOMINATION, Invariant.DOMINATION):
        assert solve(g, inv) == solve(g, inv)


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_component_additivity(a, b):
    u = a.disjoint_union(b)
    for inv in (Invariant.STRONG_DIFFERENTIAL, Invariant.DIFFERENTIAL, Invariant.ROMAN_DOMINATION,
                Invariant.TWO_DOMINATION):
        assert solve(u, inv).value == solve(a, inv).value + solve(b, inv).value


@given(graphs(min_n=1, max_n=9), st.randoms(use_true_random=False))
def test_relabeling_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    for inv in (Invariant.STRONG_DIFFERENTIAL, Invariant.ITALIAN_DOMINATION, Invariant.INDEPENDENCE):
        assert solve(g, inv).value == solve(h, inv).value


@given(graphs(min_n=1, max_n=20))
def test_graph6_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


@given(graphs(min_n=0, max_n=12))
def test_edgelist_round_trip(g):
    assert parse_edgelist(write_edgelist(g)) == g


@given(trees(min_n=2, max_n=12))
def test_trees_have_dominating_leaves_bound(t):
    # a tree with a vertex of degree >= 2 has ds >= 1
    assert t.is_tree()
    if t.max_degree >= 2:
        assert strong_differential(t).value >= 1
    else:
        assert strong_differential(t).value == 0
