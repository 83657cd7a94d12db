"""Graph streams: exhaustive small catalogs, seeded random batches, and the mixed corpus.

A stream is a list of ``(source, graph)`` pairs, where ``source`` is a text
label that regenerates the graph (a family spec where one exists).

Stream text accepted by :func:`expand` (several may be joined with ``;``)::

    <family spec>                       one graph, e.g. corona(path:3,complete:2)
    gnp:n=3..10,p=0.2/0.4/0.6,seed=7,count=500
    tree:n=10..12,seed=1,count=2000
    trees:n=3..9                        one tree per isomorphism class
    connected:n=1..6                    one connected graph per isomorphism class
    corpus                              the mixed verification corpus
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

import numpy as np

from ..errors import InvalidSpec
from ..graph import Graph
from .generators import (
    Family,
    FamilySpec,
    format_spec,
    generate,
    parse_spec,
)
from .rng import SplitMix64
from .trees import enumerate_trees

MAX_CATALOG_ORDER = 6

Stream = list[tuple[str, Graph]]


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u, v in itertools.combinations(range(n), 2)]


@lru_cache(maxsize=None)
def _canonical_masks(n: int) -> np.ndarray:
    """Canonical edge mask (minimum over all relabelings) of every labeled graph on n vertices."""
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    best = masks.copy()
    for perm in itertools.permutations(range(n)):
        image = np.zeros_like(masks)
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            j = index[(min(a, b), max(a, b))]
            image |= ((masks >> i) & 1) << j
        np.minimum(best, image, out=best)
    return best


def graph_from_mask(n: int, mask: int) -> Graph:
    return Graph(n, [p for i, p in enumerate(_pairs(n)) if mask >> i & 1])


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, minimum edge mask over relabelings); equal iff isomorphic. Only for n <= 6."""
    if g.n > MAX_CATALOG_ORDER:
        raise InvalidSpec(f"canonical_form supports n <= {MAX_CATALOG_ORDER}")
    index = {p: i for i, p in enumerate(_pairs(g.n))}
    mask = sum(1 << index[e] for e in g.edges)
    return g.n, int(_canonical_masks(g.n)[mask])


def connected_graphs(n: int) -> list[Graph]:
    """One connected graph per isomorphism class, filtered from all edge subsets of K_n."""
    if not 1 <= n <= MAX_CATALOG_ORDER:
        raise InvalidSpec(f"connected_graphs supports 1 <= n <= {MAX_CATALOG_ORDER}")
    reps = sorted(set(_canonical_masks(n).tolist()))
    graphs = (graph_from_mask(n, m) for m in reps)
    return [g for g in graphs if g.is_connected()]


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise InvalidSpec(f"bad integer range {text!r}") from None
    if a > b:
        raise InvalidSpec(f"empty range {text!r}")
    return a, b


def _options(argtext: str) -> dict[str, str]:
    opts = {}
    for item in filter(None, (s.strip() for s in argtext.split(","))):
        key, sep, val = item.partition("=")
        if not sep:
            raise InvalidSpec(f"expected key=value, got {item!r}")
        opts[key] = val
    return opts


def random_batch(kind: str, opts: dict[str, str], count: int, seed: int) -> Stream:
    """``count`` seeded graphs; sizes and probabilities drawn from the given ranges/lists."""
    lo, hi = _int_range(opts.get("n", "10"))
    probs = [float(p) for p in opts.get("p", "0.3").split("/")]
    master = SplitMix64(seed)
    out: Stream = []
    for k in range(count):
        n = lo + master.below(hi - lo + 1)
        sub = master.next_u64()
        if kind == "gnp":
            spec = FamilySpec(Family.RANDOM_GNP, (n, probs[k % len(probs)]), seed=sub)
        else:
            spec = FamilySpec(Family.RANDOM_TREE, (n,), seed=sub)
        out.append((format_spec(spec), generate(spec)))
    return out


def corpus(seed: int = 2024, random_count: int = 150) -> Stream:
    """Mixed verification corpus: random graphs, all small trees, coronas, family-G members,
    the worked examples, K_{2,r}, stars, paths and cycles."""
    specs = ["figure-a", "figure-b"]
    specs += [f"complete-bipartite:2,{r}" for r in range(1, 6)]
    specs += [f"star:{r}" for r in range(1, 8)]
    specs += [f"path:{n}" for n in range(1, 13)]
    specs += [f"cycle:{n}" for n in range(3, 13)]
    specs += [f"complete:{n}" for n in range(1, 7)]
    specs += [f"subdivided-star:{r}" for r in range(1, 7)]
    g1s = ["complete:1", "path:2", "path:3", "cycle:3", "path:4"]
    g2s = ["complete:2", "path:3", "cycle:3", "complete:1", "path:2"]
    specs += [f"corona({a},{b})" for a in g1s for b in g2s if b != "complete:1"]
    specs += ["family-g:2", "family-g:3", "family-g:2,2", "family-g:2,3", "family-g:3,2,2"]
    specs += ["family-g:2,2,edges=", "family-g:2,2,2,edges=0-1/1-2/0-2", "family-g:4,2,3,edges=0-2"]
    out: Stream = [(s, generate(parse_spec(s))) for s in specs]
    for n in range(1, 10):
        out += [(f"trees:n={n}#{i}", t) for i, t in enumerate(enumerate_trees(n))]
    out += random_batch("gnp", {"n": "3..10", "p": "0.2/0.4/0.6"}, random_count, seed)
    out += random_batch("tree", {"n": "10..12"}, 20, seed + 1)
    return out


def expand(text: str, count: int | None = None, seed: int | None = None) -> Stream:
    """Expand stream text into labeled graphs. ``count``/``seed`` override the text's own."""
    out: Stream = []
    for part in filter(None, (s.strip() for s in text.split(";"))):
        out += _expand_one(part, count, seed)
    return out


def _expand_one(text: str, count: int | None, seed: int | None) -> Stream:
    head, _, argtext = text.partition(":")
    if head == "corpus":
        opts = _options(argtext)
        return corpus(seed if seed is not None else int(opts.get("seed", 2024)),
                      count if count is not None else int(opts.get("count", 150)))
    if head == "trees":
        lo, hi = _int_range(_options(argtext).get("n", "1..9"))
        return [(f"trees:n={n}#{i}", t) for n in range(lo, hi + 1) for i, t in enumerate(enumerate_trees(n))]
    if head == "connected":
        lo, hi = _int_range(_options(argtext).get("n", "1..6"))
        return [(f"connected:n={n}#{i}", g) for n in range(lo, hi + 1) for i, g in enumerate(connected_graphs(n))]
    if head in ("gnp", "tree") and ("count=" in argtext or ".." in argtext or "/" in argtext or count):
        opts = _options(argtext)
        k = count if count is not None else int(opts.pop("count", 1))
        s = seed if seed is not None else int(opts.pop("seed", 0))
        return random_batch(head, opts, k, s)
    if seed is not None and head in ("gnp", "tree"):
        opts = _options(argtext)
        opts["seed"] = str(seed)
        text = head + ":" + ",".join(f"{k}={v}" for k, v in opts.items())
    spec = parse_spec(text)
    return [(format_spec(spec), generate(spec))]


def iter_graphs(stream: Stream) -> Iterator[Graph]:
    return (g for _, g in stream)
