#!/usr/bin/env python3
"""Evaluate the Italian-domination consequences on a graph stream, corrected and literal forms side by side."""

from __future__ import annotations

import argparse
import sys

from strongdiff.cli import TABLE_CORPUS
from strongdiff.families import expand
from strongdiff.theorems import fuzz, literal_table_readings, resolve_ids


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--stream", default=TABLE_CORPUS)
    ap.add_argument("--examples", type=int, default=3, help="counterexamples to print per failing row")
    args = ap.parse_args()

    rows = resolve_ids("concluding-table") + literal_table_readings()
    report = fuzz(expand(args.stream), checks=rows)
    print(f"{report.graphs} graphs")
    for chk in rows:
        c = report.counts[chk.id]
        print(f"{chk.id:26s} {chk.description:46s} holds={c['Holds']:4d} "
              f"not-met={c['HypothesisNotMet']:4d} violated={c['VIOLATED']:4d}")
    shown: dict[str, int] = {}
    for source, o in report.violations:
        if shown.get(o.id, 0) < args.examples:
            shown[o.id] = shown.get(o.id, 0) + 1
            print(f"  {o.id} fails on {source}: {o.lhs} vs {o.rhs}")
    corrected_fail = any(report.counts[c.id]["VIOLATED"] for c in resolve_ids("concluding-table"))
    return 1 if corrected_fail else 0


if __name__ == "__main__":
    sys.exit(main())
