from __future__ import annotations

import networkx as nx
import pytest

from strongdiff.errors import InvalidArgument, InvalidSpec, NotATree
from strongdiff.families import (
    enumerate_trees,
    is_family_T,
    labeled_trees,
    path,
    prufer_decode,
    prufer_encode,
    random_tree,
    star,
    tree_canonical_form,
)
from strongdiff.families.membership import family_T_failures
from strongdiff.graph import Graph
from strongdiff.solvers import strong_differential

# number of unlabeled trees on n vertices, n = 1..12 (OEIS A000055)
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestPrufer:
    def test_round_trip(self):
        for seed in range(50):
            t = random_tree(9, seed)
            assert prufer_decode(prufer_encode(t), 9) == t

    def test_star_sequence(self):
        assert prufer_encode(star(4)) == [0, 0, 0]

    def test_labeled_count(self):
        assert sum(1 for _ in labeled_trees(5)) == 5 ** 3
        assert len({t.edges for t in labeled_trees(5)}) == 125

    def test_bad_sequences(self):
        with pytest.raises(InvalidSpec):
            prufer_decode([0, 5], 4)
        with pytest.raises(InvalidSpec):
            prufer_decode([0], 4)

    def test_encode_needs_tree(self):
        with pytest.raises(NotATree):
            prufer_encode(Graph(3, [(0, 1)]))

    def test_matches_networkx_decoder(self):
        for seed in range(20):
            t = random_tree(8, seed)
            ref = nx.from_prufer_sequence(prufer_encode(t))
            assert sorted(map(tuple, map(sorted, ref.edges()))) == list(t.edges)


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_class_counts(self, n):
        assert sum(1 for _ in enumerate_trees(n)) == TREE_COUNTS[n - 1]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_prufer_dedup_agrees(self, n):
        by_prufer = {tree_canonical_form(t) for t in labeled_trees(n)}
        by_growth = {tree_canonical_form(t) for t in enumerate_trees(n)}
        assert by_prufer == by_growth

    def test_classes_pairwise_nonisomorphic(self):
        trees = [_nx(t) for t in enumerate_trees(8)]
        for i, a in enumerate(trees):
            assert not any(nx.is_isomorphic(a, b) for b in trees[i + 1:])

    def test_canonical_form_relabeling(self):
        t = random_tree(10, 4)
        perm = [7, 2, 9, 0, 5, 1, 8, 3, 6, 4]
        u = Graph(10, [(perm[a], perm[b]) for a, b in t.edges])
        assert tree_canonical_form(t) == tree_canonical_form(u)

    def test_range(self):
        with pytest.raises(InvalidSpec):
            list(enumerate_trees(13))
        with pytest.raises(InvalidSpec):
            list(enumerate_trees(0))


class TestFamilyT:
    def test_star(self):
        assert is_family_T(star(4))

    def test_p4(self):
        assert is_family_T(path(4))

    def test_p7(self):
        assert not is_family_T(path(7))
        assert "A.4" in family_T_failures(path(7), 3)
        assert strong_differential(path(7)).value != 2 - 1

    def test_not_a_tree(self):
        with pytest.raises(NotATree):
            is_family_T(Graph(3, [(0, 1), (1, 2), (0, 2)]))

    def test_too_small(self):
        with pytest.raises(InvalidArgument):
            is_family_T(path(2))

    def test_path_members_are_p3_p4(self):
        members = [n for n in range(3, 13) if is_family_T(path(n))]
        assert members == [3, 4]
