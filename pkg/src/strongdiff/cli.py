"""Command-line interface: ``strongdiff compute|certify|verify|generate|table``.

Exit codes: 0 success, 1 a theorem check was VIOLATED, 2 usage or parse
error, 3 size guard exceeded without ``--force``.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace
from pathlib import Path
from typing import Sequence, TextIO

from .errors import SizeGuardExceeded, StrongDiffError, UndefinedInvariant
from .families.catalog import expand
from .families.generators import FIGURE_A_LABELS, FIGURE_B_LABELS
from .graph import Graph, breakdown
from .io.edgelist import parse_edgelist, write_edgelist
from .io.graph6 import parse_graph6, write_graph6
from .io.report import (
    Report,
    TimedResult,
    breakdown_to_dict,
    dumps,
    outcome_to_dict,
    report_to_json,
    results_to_csv,
)
from .solvers import Invariant, InvariantResult, SolverConfig, solve
from .theorems import fuzz, literal_table_readings, resolve_ids

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

_LABELS = {"figure-a": FIGURE_A_LABELS, "figure-b": FIGURE_B_LABELS}

TABLE_CORPUS = (
    "connected:n=1..6;figure-a;figure-b;complete-bipartite:2,4;"
    "corona(path:3,complete:2);corona(cycle:3,path:3);family-g:2,3"
)


class UsageError(StrongDiffError):
    pass


def _read_graphs(args: argparse.Namespace) -> list[tuple[str, Graph]]:
    if args.family:
        count = getattr(args, "count", None)
        seed = getattr(args, "seed", None)
        return expand(args.family, count, seed)
    if not args.input:
        raise UsageError("one of --input or --family is required")
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    fmt = args.format or _guess_format(args.input, text)
    if fmt == "edgelist":
        return [(args.input, parse_edgelist(text))]
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("input holds no graph")
    return [(f"{args.input}:{i + 1}", parse_graph6(ln)) for i, ln in enumerate(lines)]


def _guess_format(path: str, text: str) -> str:
    if path.endswith((".g6", ".graph6")):
        return "graph6"
    first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()), "")
    return "edgelist" if first.startswith("n ") or first == "n" else "graph6"


def _config(args: argparse.Namespace) -> SolverConfig:
    cfg = SolverConfig()
    if getattr(args, "guard", None) is not None:
        cfg = replace(cfg, size_guard=args.guard)
    if getattr(args, "force", False):
        cfg = replace(cfg, allow_guard_override=True)
    if getattr(args, "strict_guard", None) is not None:
        cfg = replace(cfg, strict_guard=args.strict_guard)
    return cfg


def _single(graphs: list[tuple[str, Graph]]) -> tuple[str, Graph]:
    if len(graphs) != 1:
        raise UsageError(f"expected a single graph, got {len(graphs)}")
    return graphs[0]


def _witness_text(r: InvariantResult) -> str:
    w = r.witness
    if hasattr(w, "weights"):
        return "f=(" + ",".join(map(str, w.weights)) + ")"
    return "{" + ",".join(map(str, w.sorted())) + "}"


# -- subcommands ------------------------------------------------------------------


def cmd_compute(args: argparse.Namespace, out: TextIO) -> int:
    cfg = _config(args)
    invariants = list(Invariant) if args.invariant == "all" else [Invariant(args.invariant)]
    reports, rows = [], []
    for source, g in _read_graphs(args):
        timed, skipped = [], []
        for inv in invariants:
            start = time.perf_counter()
            try:
                res = solve(g, inv, cfg)
            except UndefinedInvariant:
                if args.invariant != "all":
                    raise
                skipped.append(inv.value)
                continue
            timed.append(TimedResult(res, round((time.perf_counter() - start) * 1000, 3)))
        reports.append(Report(g, source, tuple(timed)))
        rows += [(source, t.result) for t in timed]
        if not (args.json or args.csv):
            print(f"# {source}  n={g.n} m={g.m}", file=out)
            for t in timed:
                r = t.result
                print(f"{r.invariant.value:22s} {r.value:4d}  witness {_witness_text(r)}", file=out)
            for name in skipped:
                print(f"{name:22s}    -  undefined (isolated vertex)", file=out)
    if args.json:
        if len(reports) == 1:
            print(report_to_json(reports[0]), file=out)
        else:
            print("[\n" + ",\n".join(report_to_json(r) for r in reports) + "\n]", file=out)
    elif args.csv:
        out.write(results_to_csv(rows))
    return EXIT_OK


def _parse_set(text: str, family: str | None, n: int) -> list[int]:
    labels = _LABELS.get(family or "", {})
    members = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        if tok in labels:
            members.append(labels[tok])
        else:
            try:
                members.append(int(tok))
            except ValueError:
                raise UsageError(f"unknown vertex {tok!r}") from None
    return members


def cmd_certify(args: argparse.Namespace, out: TextIO) -> int:
    source, g = _single(_read_graphs(args))
    bd = breakdown(g, _parse_set(args.set, args.family, g.n))
    if args.json:
        print(dumps({"graph": {"n": g.n, "source": source}, "breakdown": breakdown_to_dict(bd)}), file=out)
        return EXIT_OK
    show = lambda s: "{" + ",".join(map(str, s.sorted())) + "}"  # noqa: E731
    print(f"set                 {show(bd.set)}", file=out)
    print(f"external  |{len(bd.external):2d}|    {show(bd.external)}", file=out)
    print(f"weak      |{len(bd.weak):2d}|    {show(bd.weak)}", file=out)
    print(f"strong    |{len(bd.strong):2d}|    {show(bd.strong)}", file=out)
    print(f"differential        {bd.differential}", file=out)
    print(f"strong differential {bd.strong_differential}", file=out)
    return EXIT_OK


def _print_fuzz(report, out: TextIO, json_out: bool) -> None:
    if json_out:
        print(dumps({
            "graphs": report.graphs,
            "counts": report.counts,
            "violations": [dict(outcome_to_dict(o), source=s) for s, o in report.violations],
            "inconclusive": [list(x) for x in report.inconclusive],
            "witnesses_checked": report.witnesses_checked,
            "witness_failures": [list(x) for x in report.witness_failures],
        }), file=out)
        return
    print(f"graphs: {report.graphs}   elapsed: {report.elapsed_ms:.0f} ms", file=out)
    print(f"{'check':28s} {'Holds':>7s} {'HypNotMet':>9s} {'VIOLATED':>8s} {'Inconcl':>7s}", file=out)
    for cid, c in report.counts.items():
        print(f"{cid:28s} {c['Holds']:7d} {c['HypothesisNotMet']:9d} {c['VIOLATED']:8d} {c['Inconclusive']:7d}",
              file=out)
    for source, o in report.violations:
        where = f" ({o.direction})" if o.direction else ""
        print(f"VIOLATED {o.id} on {source}: lhs={o.lhs} rhs={o.rhs}{where} {o.detail}", file=out)
    print(f"witnesses re-validated: {report.witnesses_checked - len(report.witness_failures)}"
          f"/{report.witnesses_checked}", file=out)


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    cfg = _config(args)
    checks = resolve_ids(args.check)
    report = fuzz(_read_graphs(args), checks=checks, cfg=cfg)
    _print_fuzz(report, out, args.json)
    return EXIT_OK if report.ok else EXIT_VIOLATED


def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    graphs = _read_graphs(args)
    fmt = args.format or "graph6"
    for i, (source, g) in enumerate(graphs):
        if fmt == "graph6":
            print(write_graph6(g), file=out)
        else:
            if i:
                print(file=out)
            print(f"# {source}", file=out)
            out.write(write_edgelist(g))
    return EXIT_OK


def cmd_table(args: argparse.Namespace, out: TextIO) -> int:
    cfg = _config(args)
    stream = expand(args.corpus)
    rows = resolve_ids("concluding-table")
    report = fuzz(stream, checks=rows + literal_table_readings(), cfg=cfg)
    if args.json:
        _print_fuzz(report, out, True)
    else:
        print(f"corpus: {report.graphs} graphs", file=out)
        print(f"{'row':26s} {'statement':50s} {'tested':>6s} {'fails':>5s}  result", file=out)
        for chk in rows + literal_table_readings():
            c = report.counts[chk.id]
            tested = c["Holds"] + c["VIOLATED"]
            verdict = "PASS" if c["VIOLATED"] == 0 else "FAIL"
            if chk.group.endswith("literal"):
                verdict += " (literal reading, informational)"
            print(f"{chk.id:26s} {chk.description:50s} {tested:6d} {c['VIOLATED']:5d}  {verdict}", file=out)
    failed = any(report.counts[c.id]["VIOLATED"] for c in rows)
    return EXIT_VIOLATED if failed else EXIT_OK


# -- parser -----------------------------------------------------------------------


def _add_source(p: argparse.ArgumentParser, stream: bool = False) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="graph file (graph6 lines or edge list); '-' for stdin")
    src.add_argument("--family", help="family spec, e.g. corona(path:3,complete:2)" +
                     (" or a stream such as gnp:n=3..10,p=0.3,count=100" if stream else ""))
    p.add_argument("--format", choices=["graph6", "edgelist"])


def _add_guard(p: argparse.ArgumentParser) -> None:
    p.add_argument("--guard", type=int, help="largest order accepted (default $STRONGDIFF_GUARD or 20)")
    p.add_argument("--force", action="store_true", help="solve even above the size guard")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongdiff", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="solve invariants with witnesses")
    p.add_argument("--invariant", default="all", choices=["all"] + [i.value for i in Invariant])
    _add_source(p, stream=True)
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--csv", action="store_true")
    _add_guard(p)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("certify", help="breakdown of a given vertex set")
    _add_source(p)
    p.add_argument("--set", required=True, help="comma separated vertices (figure labels allowed)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="run theorem checks over a graph stream")
    p.add_argument("--check", default="all", help="check id, group name, comma list, or 'all'")
    _add_source(p, stream=True)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--strict-guard", type=int, help="largest order for exhaustive existence checks")
    p.add_argument("--json", action="store_true")
    _add_guard(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="emit graphs from a family spec or stream")
    _add_source(p, stream=True)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("table", help="recheck the Italian-domination consequences on a small corpus")
    p.add_argument("--corpus", default=TABLE_CORPUS, help="stream text for the corpus")
    p.add_argument("--json", action="store_true")
    _add_guard(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except SizeGuardExceeded as exc:
        print(f"error: {exc} (use --force or --guard)", file=err)
        return EXIT_GUARD
    except (StrongDiffError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
