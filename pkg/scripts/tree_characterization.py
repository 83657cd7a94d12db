#!/usr/bin/env python3
"""Compare ds(T) = maxdeg(T) - 1 against membership in family T, tree by tree.

Prints, per order, how many trees satisfy each side and any disagreement.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from strongdiff.families import enumerate_trees, is_family_T, labeled_trees, random_tree
from strongdiff.solvers import strong_differential


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-class-order", type=int, default=9, help="isomorphism classes for 3..N")
    ap.add_argument("--max-labeled-order", type=int, default=6, help="every labeled tree for 3..N")
    ap.add_argument("--random", type=int, default=2000, help="random labeled trees with 10 <= n <= 12")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    sources = [(f"class n={n}", t) for n in range(3, args.max_class_order + 1) for t in enumerate_trees(n)]
    sources += [(f"labeled n={n}", t) for n in range(3, args.max_labeled_order + 1) for t in labeled_trees(n)]
    sources += [(f"random n={10 + i % 3}", random_tree(10 + i % 3, args.seed + i)) for i in range(args.random)]

    tally: Counter[tuple[str, bool, bool]] = Counter()
    for label, t in sources:
        lhs = strong_differential(t).value == t.max_degree - 1
        rhs = is_family_T(t)
        tally[(label, lhs, rhs)] += 1
        if lhs != rhs:
            print(f"DISAGREE {label}: edges={list(t.edges)} ds=maxdeg-1 is {lhs}, family T is {rhs}")

    labels = sorted({k[0] for k in tally}, key=lambda s: (s.split()[0], int(s.split("=")[1])))
    print(f"{'stream':16s} {'trees':>6s} {'both':>6s} {'neither':>7s} {'disagree':>8s}")
    bad = 0
    for label in labels:
        both = tally[(label, True, True)]
        neither = tally[(label, False, False)]
        off = tally[(label, True, False)] + tally[(label, False, True)]
        bad += off
        print(f"{label:16s} {both + neither + off:6d} {both:6d} {neither:7d} {off:8d}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
