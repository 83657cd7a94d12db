#!/usr/bin/env python3
"""Distribution of ds over all connected graphs of order at most 6, up to isomorphism."""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from strongdiff.families import connected_graphs
from strongdiff.io import write_graph6
from strongdiff.solvers import strong_differential


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--show", type=int, default=1, help="list graph6 codes of graphs with this ds (n >= 3)")
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        graphs = connected_graphs(n)
        values = Counter(strong_differential(g).value for g in graphs)
        dist = "  ".join(f"ds={k}:{values[k]}" for k in sorted(values))
        print(f"n={n}  classes={len(graphs):4d}  {dist}")
    hits = [g for n in range(3, args.max_n + 1) for g in connected_graphs(n)
            if strong_differential(g).value == args.show]
    print(f"connected graphs with n>=3 and ds={args.show}: " + " ".join(write_graph6(g) for g in hits))
    return 0


if __name__ == "__main__":
    sys.exit(main())
