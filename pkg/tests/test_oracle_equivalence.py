from __future__ import annotations

import networkx as nx
import pytest

from strongdiff.families import random_gnp
from strongdiff.graph import Graph
from strongdiff.solvers import Invariant, oracle, solve, verify_witness


def _from_nx(h: nx.Graph) -> Graph:
    return Graph(h.number_of_nodes(), list(h.edges()))


def _atlas(max_n: int, connected: bool) -> list[Graph]:
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(_from_nx(h))
    return out


def _agree(g: Graph) -> None:
    for inv in Invariant:
        if inv is Invariant.SEMITOTAL_DOMINATION and g.has_isolated_vertex():
            continue
        fast, slow = solve(g, inv), oracle(g, inv)
        assert fast.value == slow.value, (g.edges, inv)
        assert verify_witness(g, fast) and verify_witness(g, slow)


@pytest.mark.slow
def test_connected_atlas_up_to_seven():
    catalog = _atlas(7, connected=True)
    # connected graphs on 1..7 vertices, counted up to isomorphism
    assert len(catalog) == 1 + 1 + 2 + 6 + 21 + 112 + 853
    for g in catalog:
        _agree(g)


def test_disconnected_atlas_up_to_five():
    for g in _atlas(5, connected=False):
        _agree(g)


@pytest.mark.slow
@pytest.mark.parametrize("block", range(4))
def test_random_sample(block):
    # 4 blocks of 250 graphs, n <= 10
    for i in range(250):
        seed = 1000 * block + i
        n = 2 + seed % 9
        p = (0.15, 0.3, 0.5, 0.7)[seed % 4]
        _agree(random_gnp(n, p, seed))
