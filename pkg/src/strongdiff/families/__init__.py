"""Graph families, named examples, random generators and membership tests."""

from __future__ import annotations

from .catalog import canonical_form, connected_graphs, corpus, expand
from .generators import (
    FIGURE_A_LABELS,
    FIGURE_A_SET,
    FIGURE_B_LABELS,
    Family,
    FamilySpec,
    complete,
    complete_bipartite,
    corona,
    cycle,
    family_g,
    figure_a,
    figure_b,
    format_spec,
    generate,
    parse_spec,
    path,
    random_gnp,
    star,
    subdivided_star,
)
from .membership import family_T_failures, is_family_G, is_family_T
from .rng import SplitMix64
from .trees import (
    enumerate_trees,
    labeled_trees,
    prufer_decode,
    prufer_encode,
    random_tree,
    tree_canonical_form,
)

__all__ = [
    "FIGURE_A_LABELS",
    "FIGURE_A_SET",
    "FIGURE_B_LABELS",
    "Family",
    "FamilySpec",
    "SplitMix64",
    "canonical_form",
    "complete",
    "complete_bipartite",
    "connected_graphs",
    "corona",
    "corpus",
    "cycle",
    "enumerate_trees",
    "expand",
    "family_T_failures",
    "family_g",
    "figure_a",
    "figure_b",
    "format_spec",
    "generate",
    "is_family_G",
    "is_family_T",
    "labeled_trees",
    "parse_spec",
    "path",
    "prufer_decode",
    "prufer_encode",
    "random_gnp",
    "random_tree",
    "star",
    "subdivided_star",
    "tree_canonical_form",
]
