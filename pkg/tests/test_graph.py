from __future__ import annotations

import pytest

from strongdiff.errors import InvalidArgument, InvalidVertex, UndefinedInvariant
from strongdiff.families import FIGURE_A_LABELS as A
from strongdiff.families import FIGURE_A_SET, FIGURE_B_LABELS as B
from strongdiff.families import cycle, figure_a, figure_b, path, star, subdivided_star
from strongdiff.graph import (
    Graph,
    VertexSet,
    WeightFunction,
    breakdown,
    degree_two_neighbors,
    eccentricity,
    external_neighborhood,
    external_private_neighborhood,
    is_2_dominating,
    is_dominating,
    is_idf,
    is_independent,
    is_rdf,
    is_semitotal_dominating,
    is_vertex_cover,
    leaf_neighbors,
    leaves,
    open_neighborhood,
    sigma,
    supports,
)

FIG_A_D = [A[x] for x in FIGURE_A_SET]


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(InvalidArgument):
            Graph(3, [(1, 1)])

    def test_rejects_parallel_edges(self):
        with pytest.raises(InvalidArgument):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidVertex):
            Graph(2, [(0, 2)])

    def test_adjacency_symmetric_and_degree_sum(self):
        g = figure_a()
        for u in range(g.n):
            for v in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)
        assert sum(g.degrees) == 2 * g.m

    def test_edges_normalised(self):
        assert Graph(3, [(2, 1), (1, 0)]).edges == ((0, 1), (1, 2))

    def test_empty_graph_set_operations(self):
        g = Graph(0)
        assert len(external_neighborhood(g, [])) == 0
        assert breakdown(g, []).strong_differential == 0

    def test_vertex_set_validation(self):
        with pytest.raises(InvalidVertex):
            VertexSet.of(3, [3])

    def test_components_and_induced(self):
        g = Graph(5, [(0, 1), (3, 4)])
        assert g.components() == [0b11, 0b100, 0b11000]
        sub, old = g.induced(0b11000)
        assert sub.edges == ((0, 1),) and old == [3, 4]


class TestNeighborhoods:
    def test_open_neighborhood_path_center(self):
        assert open_neighborhood(path(3), 1).sorted() == [0, 2]

    def test_open_neighborhood_isolated(self):
        assert len(open_neighborhood(Graph(1), 0)) == 0

    def test_open_neighborhood_figure_a(self):
        nb = open_neighborhood(figure_a(), A["a1"])
        assert set(nb) == {A["a11"], A["a12"], A["a13"], A["a2"]}

    def test_open_neighborhood_bad_vertex(self):
        with pytest.raises(InvalidVertex):
            open_neighborhood(path(3), 3)

    @pytest.mark.parametrize("s", [[], [0, 1, 2, 3]])
    def test_external_trivial(self, s):
        assert len(external_neighborhood(cycle(4), s)) == 0

    def test_external_figure_a(self):
        assert len(external_neighborhood(figure_a(), FIG_A_D)) == 9

    def test_epn_star_center(self):
        assert external_private_neighborhood(star(3), 0, [0]).sorted() == [1, 2, 3]

    def test_epn_double_domination(self):
        assert len(external_private_neighborhood(cycle(4), 0, [0, 2])) == 0

    def test_epn_figure_a_black_vertex(self):
        assert len(external_private_neighborhood(figure_a(), A["b1"], FIG_A_D)) == 0

    def test_epn_requires_membership(self):
        with pytest.raises(InvalidArgument):
            external_private_neighborhood(path(3), 0, [1])


class TestBreakdown:
    def test_figure_a_set(self):
        bd = breakdown(figure_a(), FIG_A_D)
        assert bd.weak.sorted() == [A["a1"]]
        assert set(bd.strong) == {A["b1"], A["b3"], A["c1"], A["c3"]}
        assert len(bd.external) == 9
        assert bd.strong_differential == 8

    def test_empty_set(self):
        bd = breakdown(figure_a(), [])
        assert (len(bd.set), len(bd.external), len(bd.weak), len(bd.strong)) == (0, 0, 0, 0)
        assert bd.differential == bd.strong_differential == 0

    def test_star_center(self):
        bd = breakdown(star(4), [0])
        assert bd.weak.sorted() == [0]
        assert bd.strong_differential == 3

    def test_type_invariants(self):
        g = figure_b()
        bd = breakdown(g, [0, 5, 7])
        assert (bd.weak | bd.strong) == bd.set and len(bd.weak & bd.strong) == 0
        assert len(bd.external & bd.set) == 0
        assert bd.differential == len(bd.external) - len(bd.set)
        assert bd.strong_differential == len(bd.external) - len(bd.weak) == bd.differential + len(bd.strong)


class TestPredicates:
    def test_c4_opposite_pair(self):
        assert is_dominating(cycle(4), [0, 2])
        assert is_2_dominating(cycle(4), [0, 2])

    def test_figure_b_outer_vertices_independent(self):
        outer = [B[x] for x in ("a12", "a23", "a34", "a41")]
        assert is_independent(figure_b(), outer)

    def test_p4_semitotal(self):
        assert is_semitotal_dominating(path(4), [1, 2])

    def test_semitotal_needs_no_isolated_vertices(self):
        with pytest.raises(UndefinedInvariant):
            is_semitotal_dominating(Graph(3, [(0, 1)]), [0])

    def test_semitotal_distance_two(self):
        # vertices 0 and 2 of P5 are at distance two, but 4 is left undominated
        assert not is_semitotal_dominating(path(5), [0, 2])
        assert is_semitotal_dominating(path(5), [1, 3])

    def test_vertex_cover(self):
        assert is_vertex_cover(cycle(4), [0, 2])
        assert not is_vertex_cover(cycle(4), [0, 1])

    def test_idf_constant_one(self):
        assert is_idf(figure_a(), WeightFunction((1,) * 14))

    def test_p3_two_ones(self):
        f = WeightFunction((1, 0, 1))
        assert is_idf(path(3), f) and not is_rdf(path(3), f)

    def test_c4_single_two(self):
        assert not is_idf(cycle(4), WeightFunction((2, 0, 0, 0)))

    def test_length_mismatch(self):
        with pytest.raises(InvalidArgument):
            is_idf(path(3), WeightFunction((1, 1)))

    def test_weight_function_levels(self):
        f = WeightFunction((2, 0, 1, 1))
        assert f.weight == len(f.v1) + 2 * len(f.v2) == 4
        assert f.v0.sorted() == [1]


class TestStructure:
    def test_star_leaves_supports(self):
        g = star(3)
        assert leaves(g).sorted() == [1, 2, 3]
        assert supports(g).sorted() == [0]
        assert sigma(g) == 1

    def test_p4_sigma(self):
        assert sigma(path(4)) == 0

    def test_subdivided_star(self):
        g = subdivided_star(4)
        assert g.n == 6
        assert sigma(g) == 1
        assert eccentricity(g, 0) == 2

    def test_leaf_and_degree_two_neighbors(self):
        g = subdivided_star(4)
        assert len(leaf_neighbors(g, 0)) == 3
        assert degree_two_neighbors(g, 0).sorted() == [5]

    def test_eccentricity_per_component(self):
        g = Graph(5, [(0, 1), (1, 2), (3, 4)])
        assert eccentricity(g, 0) == 2
        assert eccentricity(g, 3) == 1
