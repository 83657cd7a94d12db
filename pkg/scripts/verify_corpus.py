#!/usr/bin/env python3
"""Run the theorem registry over the mixed corpus (or any stream) and print per-check counts."""

from __future__ import annotations

import argparse
import sys

from strongdiff.families import corpus, expand
from strongdiff.solvers import SolverConfig
from strongdiff.theorems import Status, fuzz, resolve_ids


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--stream", default="corpus", help="stream text, e.g. 'gnp:n=3..10,p=0.3,count=500,seed=1'")
    ap.add_argument("--checks", default="all")
    ap.add_argument("--seed", type=int, default=2024, help="seed for the corpus random part")
    ap.add_argument("--random-count", type=int, default=150)
    ap.add_argument("--strict-guard", type=int, default=16)
    args = ap.parse_args()

    stream = corpus(args.seed, args.random_count) if args.stream == "corpus" else expand(args.stream)
    report = fuzz(stream, checks=resolve_ids(args.checks), cfg=SolverConfig(strict_guard=args.strict_guard))

    print(f"{report.graphs} graphs, {report.elapsed_ms / 1000:.1f}s")
    print(f"{'check':28s} {'Holds':>6s} {'NotMet':>6s} {'VIOL':>5s} {'Inc':>4s}")
    for cid, c in report.counts.items():
        print(f"{cid:28s} {c['Holds']:6d} {c['HypothesisNotMet']:6d} {c['VIOLATED']:5d} {c['Inconclusive']:4d}")
    for source, o in report.violations:
        print(f"VIOLATED {o.id} on {source}: {o.lhs} vs {o.rhs} {o.direction or ''}")
    print(f"violated={report.total(Status.VIOLATED)} inconclusive={report.total(Status.INCONCLUSIVE)} "
          f"witnesses={report.witnesses_checked} invalid={len(report.witness_failures)}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
