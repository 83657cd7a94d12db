"""Deterministic graph families, the two worked-example graphs, and the spec text grammar.

Text forms (canonical output of :func:`format_spec`)::

    path:5   cycle:6   star:4   complete:3   complete-bipartite:2,3
    subdivided-star:4   figure-a   figure-b   family-g:2,3[,edges=0-1/1-2]
    corona(path:3,complete:2)   gnp:n=12,p=0.3,seed=42   tree:n=10,seed=3
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from ..errors import InvalidSpec
from ..graph import Graph
from .rng import SplitMix64
from .trees import random_tree


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    SUBDIVIDED_STAR = "subdivided-star"
    CORONA = "corona"
    FAMILY_G = "family-g"
    FIGURE_A = "figure-a"
    FIGURE_B = "figure-b"
    RANDOM_GNP = "gnp"
    RANDOM_TREE = "tree"


# Labels follow the drawings: a1 carries three pendant leaves and a path a1-a2-a3;
# a3 meets the 4-cycles b1b2b3b4 and c1c2c3c4 at b1 and c1.
FIGURE_A_LABELS: dict[str, int] = {
    label: i
    for i, label in enumerate(
        ["a1", "a11", "a12", "a13", "a2", "a3", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4"]
    )
}
_FIGURE_A_EDGES = [
    ("a11", "a1"), ("a1", "a2"), ("a2", "a3"), ("a3", "b1"), ("b1", "b2"), ("b2", "b3"),
    ("b3", "b4"), ("b4", "b1"), ("a3", "c1"), ("c1", "c2"), ("c2", "c3"), ("c3", "c4"),
    ("c4", "c1"), ("a1", "a12"), ("a1", "a13"),
]  # fmt: skip
FIGURE_A_SET = ("a1", "b1", "b3", "c1", "c3")

# 4-cycle a1a2a3a4 plus a vertex a_ij on each cycle edge, adjacent to both ends.
FIGURE_B_LABELS: dict[str, int] = {
    label: i for i, label in enumerate(["a1", "a2", "a3", "a4", "a12", "a23", "a34", "a41"])
}
_FIGURE_B_EDGES = [
    ("a1", "a2"), ("a2", "a3"), ("a3", "a4"), ("a4", "a1"),
    ("a1", "a12"), ("a12", "a2"), ("a2", "a23"), ("a23", "a3"),
    ("a3", "a34"), ("a34", "a4"), ("a4", "a41"), ("a41", "a1"),
]  # fmt: skip


def _labelled(labels: dict[str, int], edges: list[tuple[str, str]]) -> Graph:
    return Graph(len(labels), [(labels[u], labels[v]) for u, v in edges])


def figure_a() -> Graph:
    return _labelled(FIGURE_A_LABELS, _FIGURE_A_EDGES)


def figure_b() -> Graph:
    return _labelled(FIGURE_B_LABELS, _FIGURE_B_EDGES)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(r: int) -> Graph:
    """K_{1,r} with center 0."""
    return Graph(r + 1, [(0, i) for i in range(1, r + 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def subdivided_star(r: int) -> Graph:
    """K_{1,r} (center 0, leaves 1..r) with edge 0-r subdivided by vertex r+1."""
    edges = [(0, i) for i in range(1, r)] + [(0, r + 1), (r + 1, r)]
    return Graph(r + 2, edges)


def corona(g1: Graph, g2: Graph) -> Graph:
    """G1 first, then copy i of G2 in order, each joined to vertex i of G1."""
    n1, n2 = g1.n, g2.n
    edges = list(g1.edges)
    for i in range(n1):
        base = n1 + i * n2
        edges += [(base + u, base + v) for u, v in g2.edges]
        edges += [(i, base + j) for j in range(n2)]
    return Graph(n1 + n1 * n2, edges)


def family_g(leaves: tuple[int, ...], support_edges: tuple[tuple[int, int], ...] | None = None) -> Graph:
    """Supports 0..s-1 (joined as a path unless ``support_edges`` is given), then their leaves."""
    s = len(leaves)
    if support_edges is None:
        support_edges = tuple((i, i + 1) for i in range(s - 1))
    edges = list(support_edges)
    nxt = s
    for i, k in enumerate(leaves):
        edges += [(i, nxt + j) for j in range(k)]
        nxt += k
    return Graph(nxt, edges)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p); pairs (u, v) are visited in lexicographic order."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise InvalidSpec(f"gnp needs n >= 1 and p in [0, 1], got n={n}, p={p}")
    rng = SplitMix64(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# -- FamilySpec -----------------------------------------------------------------

_ARITY = {
    Family.PATH: 1,
    Family.CYCLE: 1,
    Family.STAR: 1,
    Family.COMPLETE: 1,
    Family.COMPLETE_BIPARTITE: 2,
    Family.SUBDIVIDED_STAR: 1,
    Family.CORONA: 2,
    Family.FIGURE_A: 0,
    Family.FIGURE_B: 0,
    Family.RANDOM_GNP: 2,
    Family.RANDOM_TREE: 1,
}
_MINIMUM = {
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.STAR: 1,
    Family.COMPLETE: 1,
    Family.COMPLETE_BIPARTITE: 1,
    Family.SUBDIVIDED_STAR: 1,
    Family.RANDOM_TREE: 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters.

    ``params`` holds ints for the sized families, two nested FamilySpecs for a
    corona, ``(n, p)`` for gnp, and ``(leaves_per_support, support_edges)``
    for family-g (``support_edges`` may be None for the default path).
    """

    family: Family
    params: tuple[Any, ...] = ()
    seed: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "params", tuple(self.params))
        fam, params = self.family, self.params
        if fam is Family.FAMILY_G:
            self._check_family_g()
        elif len(params) != _ARITY[fam]:
            raise InvalidSpec(f"{fam.value} takes {_ARITY[fam]} parameter(s), got {len(params)}")
        elif fam is Family.CORONA:
            if not all(isinstance(p, FamilySpec) for p in params):
                raise InvalidSpec("corona takes two nested family specs")
        elif fam is Family.RANDOM_GNP:
            n, p = params
            if not isinstance(n, int) or n < 1 or not 0.0 <= float(p) <= 1.0:
                raise InvalidSpec(f"gnp needs n >= 1 and p in [0, 1], got {params}")
        elif fam in _MINIMUM:
            if not all(isinstance(x, int) and x >= _MINIMUM[fam] for x in params):
                raise InvalidSpec(f"{fam.value} parameters must be integers >= {_MINIMUM[fam]}, got {params}")
        if fam in (Family.RANDOM_GNP, Family.RANDOM_TREE):
            if self.seed is None or not 0 <= self.seed < 1 << 64:
                raise InvalidSpec(f"{fam.value} needs a 64-bit seed")
        elif self.seed is not None:
            raise InvalidSpec(f"{fam.value} is deterministic and takes no seed")

    def _check_family_g(self) -> None:
        if len(self.params) not in (1, 2):
            raise InvalidSpec("family-g takes (leaves_per_support[, support_edges])")
        leaves = tuple(self.params[0])
        edges = self.params[1] if len(self.params) == 2 else None
        if not leaves or any(not isinstance(k, int) or k < 2 for k in leaves):
            raise InvalidSpec("family-g needs at least one support, each with >= 2 leaves")
        if edges is not None:
            if any(len(e) != 2 for e in edges):
                raise InvalidSpec("family-g support edges are vertex pairs")
            edges = tuple((int(u), int(v)) for u, v in edges)
            if any(not (0 <= u < len(leaves) and 0 <= v < len(leaves)) or u == v for u, v in edges):
                raise InvalidSpec("family-g support edges must join distinct supports")
        object.__setattr__(self, "params", (leaves, edges))

    def __str__(self) -> str:
        return format_spec(self)


def generate(spec: FamilySpec) -> Graph:
    fam, p = spec.family, spec.params
    if fam is Family.PATH:
        return path(p[0])
    if fam is Family.CYCLE:
        return cycle(p[0])
    if fam is Family.STAR:
        return star(p[0])
    if fam is Family.COMPLETE:
        return complete(p[0])
    if fam is Family.COMPLETE_BIPARTITE:
        return complete_bipartite(*p)
    if fam is Family.SUBDIVIDED_STAR:
        return subdivided_star(p[0])
    if fam is Family.CORONA:
        return corona(generate(p[0]), generate(p[1]))
    if fam is Family.FAMILY_G:
        return family_g(*p)
    if fam is Family.FIGURE_A:
        return figure_a()
    if fam is Family.FIGURE_B:
        return figure_b()
    if fam is Family.RANDOM_GNP:
        return random_gnp(p[0], float(p[1]), spec.seed)
    return random_tree(p[0], spec.seed)


def format_spec(spec: FamilySpec) -> str:
    fam, p = spec.family, spec.params
    if fam is Family.CORONA:
        return f"corona({format_spec(p[0])},{format_spec(p[1])})"
    if fam in (Family.FIGURE_A, Family.FIGURE_B):
        return fam.value
    if fam is Family.RANDOM_GNP:
        return f"gnp:n={p[0]},p={float(p[1])!r},seed={spec.seed}"
    if fam is Family.RANDOM_TREE:
        return f"tree:n={p[0]},seed={spec.seed}"
    if fam is Family.FAMILY_G:
        leaves, edges = p
        text = "family-g:" + ",".join(map(str, leaves))
        if edges is not None:
            text += ",edges=" + "/".join(f"{u}-{v}" for u, v in edges)
        return text
    return f"{fam.value}:" + ",".join(map(str, p))


def _split_top(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidSpec(f"unbalanced parentheses in {text!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise InvalidSpec(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:])
    return [s.strip() for s in parts]


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InvalidSpec(f"{what}: expected an integer, got {text!r}") from None


def parse_spec(text: str) -> FamilySpec:
    """Parse one family spec in the text form shown in the module docstring."""
    text = text.strip()
    if not text:
        raise InvalidSpec("empty family spec")
    if "(" in text.split(":", 1)[0]:
        name, _, rest = text.partition("(")
        if not rest.endswith(")"):
            raise InvalidSpec(f"expected ')' at end of {text!r}")
        inner = _split_top(rest[:-1])
        try:
            fam = Family(name.strip())
        except ValueError:
            raise InvalidSpec(f"unknown family {name!r}") from None
        return FamilySpec(fam, tuple(parse_spec(s) for s in inner))
    name, _, argtext = text.partition(":")
    try:
        fam = Family(name.strip())
    except ValueError:
        raise InvalidSpec(f"unknown family {name!r}") from None
    args = [a for a in _split_top(argtext)] if argtext else []
    positional = [a for a in args if "=" not in a]
    keyed = dict(a.split("=", 1) for a in args if "=" in a)
    if fam is Family.RANDOM_GNP:
        unknown = set(keyed) - {"n", "p", "seed"}
        if unknown or positional or not {"n", "p", "seed"} <= set(keyed):
            raise InvalidSpec(f"gnp spec needs exactly n=, p=, seed=: {text!r}")
        try:
            p = float(keyed["p"])
        except ValueError:
            raise InvalidSpec(f"gnp: bad probability {keyed['p']!r}") from None
        return FamilySpec(fam, (_int(keyed["n"], "n"), p), seed=_int(keyed["seed"], "seed"))
    if fam is Family.RANDOM_TREE:
        if positional or set(keyed) != {"n", "seed"}:
            raise InvalidSpec(f"tree spec needs exactly n=, seed=: {text!r}")
        return FamilySpec(fam, (_int(keyed["n"], "n"),), seed=_int(keyed["seed"], "seed"))
    if fam is Family.FAMILY_G:
        leaves = tuple(_int(a, "leaves") for a in positional)
        edges = None
        if "edges" in keyed:
            raw = keyed.pop("edges")
            edges = tuple(
                tuple(_int(x, "support edge") for x in e.split("-")) for e in raw.split("/") if e
            )
        if keyed:
            raise InvalidSpec(f"unknown family-g options {sorted(keyed)}")
        return FamilySpec(fam, (leaves, edges))
    if keyed:
        raise InvalidSpec(f"{fam.value} takes positional parameters only: {text!r}")
    return FamilySpec(fam, tuple(_int(a, fam.value) for a in positional))
