from __future__ import annotations

import networkx as nx
import pytest

from strongdiff.errors import InvalidSpec
from strongdiff.families import (
    FIGURE_A_LABELS as A,
    FIGURE_B_LABELS as B,
    Family,
    FamilySpec,
    SplitMix64,
    canonical_form,
    complete,
    complete_bipartite,
    connected_graphs,
    corona,
    corpus,
    cycle,
    expand,
    family_g,
    figure_a,
    figure_b,
    format_spec,
    generate,
    is_family_G,
    parse_spec,
    path,
    random_gnp,
    random_tree,
    star,
    subdivided_star,
)
from strongdiff.families.membership import corona_decomposition
from strongdiff.graph import Graph, leaves, sigma, supports
from strongdiff.solvers import differential, domination_number, strong_differential


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestNamedGraphs:
    def test_corona_k1_k2_is_triangle(self):
        g = corona(complete(1), complete(2))
        assert g == cycle(3)
        assert strong_differential(g).value == 1

    def test_corona_numbering(self):
        g = corona(path(2), path(2))
        # G1 on 0,1; copy i of G2 on 2+2i, 3+2i, joined to vertex i
        assert set(g.edges) == {(0, 1), (2, 3), (4, 5), (0, 2), (0, 3), (1, 4), (1, 5)}

    def test_figure_a_shape(self):
        g = figure_a()
        assert (g.n, g.m) == (14, 15)
        assert g.degree(A["a1"]) == 4 and g.degree(A["a3"]) == 3
        assert leaves(g).sorted() == sorted(A[x] for x in ("a11", "a12", "a13"))
        for c in "bc":
            ring = [A[f"{c}{i}"] for i in range(1, 5)]
            for i in range(4):
                assert g.has_edge(ring[i], ring[(i + 1) % 4])

    def test_figure_b_shape(self):
        g = figure_b()
        assert (g.n, g.m) == (8, 12)
        for name in ("a12", "a23", "a34", "a41"):
            i, j = name[1], name[2]
            assert g.adj[B[name]] == (1 << B[f"a{i}"]) | (1 << B[f"a{j}"])

    def test_star_center_zero(self):
        assert star(4).degree(0) == 4

    def test_subdivided_star_is_spider(self):
        g = subdivided_star(3)
        assert g.is_tree() and g.n == 5 and sorted(g.degrees) == [1, 1, 1, 2, 3]

    def test_complete_bipartite_isomorphic_to_nx(self):
        assert nx.is_isomorphic(_nx(complete_bipartite(2, 3)), nx.complete_bipartite_graph(2, 3))

    def test_family_g_default(self):
        g = family_g((2, 3))
        assert g.n == 7 and is_family_G(g)
        assert supports(g).sorted() == [0, 1]


class TestCoronaFormula:
    @pytest.mark.parametrize("g1", [complete(1), path(2), path(3), cycle(3), path(4)])
    @pytest.mark.parametrize("g2", [complete(2), path(3), cycle(3)])
    def test_values(self, g1, g2):
        g = corona(g1, g2)
        expected = g1.n * (g2.n - 1)
        assert strong_differential(g).value == expected
        assert differential(g).value == expected

    def test_k2_corona_half_beta(self):
        g = corona(path(4), complete(2))
        gamma = domination_number(g).value
        assert strong_differential(g).value == 4 == (g.n - gamma) // 2

    def test_recognition(self):
        assert corona_decomposition(corona(path(3), cycle(3))) is not None
        assert corona_decomposition(star(3)) == (1, 3)
        assert corona_decomposition(path(4)) is None
        assert corona_decomposition(figure_a()) is None


class TestFamilyG:
    def test_k13(self):
        assert is_family_G(star(3))

    def test_p4(self):
        assert not is_family_G(path(4))

    def test_two_cherries(self):
        assert is_family_G(Graph(6, [(0, 1), (0, 2), (3, 4), (3, 5)]))

    def test_small_orders(self):
        assert not is_family_G(path(2)) and not is_family_G(Graph(1))

    @pytest.mark.parametrize("leaves_", [(2,), (2, 2), (2, 3, 2), (4, 2, 2, 3)])
    def test_remark_values(self, leaves_):
        g = family_g(leaves_)
        gamma = domination_number(g).value
        ds = strong_differential(g).value
        assert ds == differential(g).value == g.n - 2 * gamma == g.n - gamma - sigma(g)


class TestFamilySpec:
    @pytest.mark.parametrize(
        "text",
        [
            "path:5",
            "cycle:6",
            "star:4",
            "complete:3",
            "complete-bipartite:2,3",
            "subdivided-star:4",
            "figure-a",
            "figure-b",
            "family-g:2,3",
            "family-g:2,2,2,edges=0-1/0-2",
            "corona(path:3,complete:2)",
            "corona(corona(path:1,path:2),cycle:3)",
            "gnp:n=12,p=0.3,seed=42",
            "tree:n=10,seed=3",
        ],
    )
    def test_round_trip(self, text):
        spec = parse_spec(text)
        assert format_spec(spec) == text
        assert parse_spec(format_spec(spec)) == spec
        assert generate(spec) == generate(parse_spec(text))

    @pytest.mark.parametrize(
        "text",
        ["", "path:0", "cycle:2", "path:x", "gnp:n=5,p=1.5,seed=1", "gnp:n=5,p=0.5",
         "corona(path:3)", "corona(path:3,cycle:4", "family-g:1,3", "family-g:2,2,edges=0-0",
         "nonsense:3", "figure-a:3", "tree:n=0,seed=1"],
    )
    def test_rejects(self, text):
        with pytest.raises(InvalidSpec):
            generate(parse_spec(text))

    def test_seed_rules(self):
        with pytest.raises(InvalidSpec):
            FamilySpec(Family.PATH, (3,), seed=1)
        with pytest.raises(InvalidSpec):
            FamilySpec(Family.RANDOM_GNP, (5, 0.5))
        with pytest.raises(InvalidSpec):
            FamilySpec(Family.RANDOM_TREE, (5,), seed=-1)

    def test_corona_needs_specs(self):
        with pytest.raises(InvalidSpec):
            FamilySpec(Family.CORONA, (3, 4))


class TestRandom:
    def test_splitmix_reference_stream(self):
        # published outputs of the splitmix64 reference generator for seed 0
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_gnp_reproducible(self):
        assert random_gnp(12, 0.3, 42) == random_gnp(12, 0.3, 42)
        assert random_gnp(12, 0.3, 42) != random_gnp(12, 0.3, 43)

    def test_gnp_extremes(self):
        assert random_gnp(6, 0.0, 1).m == 0
        assert random_gnp(6, 1.0, 1) == complete(6)

    def test_random_tree(self):
        assert random_tree(1, 99) == Graph(1)
        for seed in range(30):
            t = random_tree(11, seed)
            assert t.is_tree() and t == random_tree(11, seed)

    def test_random_tree_rejects(self):
        with pytest.raises(InvalidSpec):
            random_tree(0, 1)


class TestCatalog:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
    def test_connected_counts(self, n, count):
        graphs = connected_graphs(n)
        assert len(graphs) == count
        assert all(g.is_connected() for g in graphs)

    def test_connected_classes_distinct(self):
        graphs = connected_graphs(5)
        for i, a in enumerate(graphs):
            for b in graphs[i + 1:]:
                assert not nx.is_isomorphic(_nx(a), _nx(b))

    def test_canonical_form_detects_isomorphism(self):
        g = random_gnp(6, 0.5, 5)
        perm = [3, 5, 0, 1, 4, 2]
        h = Graph(6, [(perm[u], perm[v]) for u, v in g.edges])
        assert canonical_form(g) == canonical_form(h)
        assert canonical_form(path(5)) != canonical_form(star(4))

    def test_expand_batches(self):
        stream = expand("gnp:n=9,p=0.35,count=20,seed=7")
        assert len(stream) == 20
        assert all(g.n == 9 for _, g in stream)
        again = expand("gnp:n=9,p=0.35,count=20,seed=7")
        assert [g for _, g in stream] == [g for _, g in again]

    def test_expand_sources_regenerate(self):
        for source, g in expand("gnp:n=4..8,p=0.3/0.6,count=10,seed=3;tree:n=6..9,seed=1,count=5"):
            assert generate(parse_spec(source)) == g

    def test_expand_mixed(self):
        stream = expand("trees:n=6;connected:n=4;path:3")
        assert len(stream) == 6 + 6 + 1

    def test_corpus(self):
        stream = corpus()
        sources = [s for s, _ in stream]
        assert len(stream) == len(set(sources))
        assert "figure-a" in sources and "figure-b" in sources
        assert max(g.n for _, g in stream) <= 16
