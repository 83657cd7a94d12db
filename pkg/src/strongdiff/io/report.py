"""Machine-readable reports: versioned JSON and a flat CSV view.

JSON keys are sorted and every vertex set is a sorted index array, so a
report re-serialises to the same text. Non-integral bounds are written as
``"p/q"`` strings.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from ..errors import ParseError
from ..graph import DifferentialBreakdown, Graph, VertexSet, WeightFunction
from ..solvers import Invariant, InvariantResult, Method
from ..theorems.registry import CheckOutcome, Counterexample, Status

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class TimedResult:
    result: InvariantResult
    elapsed_ms: float = 0.0


@dataclass(frozen=True)
class TimedCheck:
    outcome: CheckOutcome
    elapsed_ms: float = 0.0


@dataclass(frozen=True)
class Report:
    graph: Graph
    source: str = ""
    results: tuple[TimedResult, ...] = ()
    checks: tuple[TimedCheck, ...] = ()
    schema_version: str = SCHEMA_VERSION


# -- encoding -------------------------------------------------------------------


def _num(x: Optional[int | Fraction]) -> Any:
    if x is None or isinstance(x, int):
        return x
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _unnum(x: Any) -> Optional[int | Fraction]:
    if isinstance(x, str):
        return Fraction(x)
    return x


def _set(s: VertexSet) -> list[int]:
    return s.sorted()


def breakdown_to_dict(bd: DifferentialBreakdown) -> dict:
    return {
        "set": _set(bd.set),
        "external": _set(bd.external),
        "weak": _set(bd.weak),
        "strong": _set(bd.strong),
        "differential": bd.differential,
        "strong_differential": bd.strong_differential,
    }


def _breakdown_from(n: int, d: dict) -> DifferentialBreakdown:
    return DifferentialBreakdown(
        set=VertexSet.of(n, d["set"]),
        external=VertexSet.of(n, d["external"]),
        weak=VertexSet.of(n, d["weak"]),
        strong=VertexSet.of(n, d["strong"]),
        differential=d["differential"],
        strong_differential=d["strong_differential"],
    )


def result_to_dict(r: InvariantResult, elapsed_ms: float = 0.0) -> dict:
    if isinstance(r.witness, WeightFunction):
        witness = {"kind": "function", "weights": list(r.witness.weights)}
    else:
        witness = {"kind": "set", "members": _set(r.witness)}
    return {
        "invariant": r.invariant.value,
        "value": r.value,
        "method": r.method.value,
        "witness": witness,
        "breakdown": breakdown_to_dict(r.breakdown) if r.breakdown else None,
        "elapsed_ms": elapsed_ms,
    }


def _result_from(n: int, d: dict) -> TimedResult:
    w = d["witness"]
    witness = WeightFunction(w["weights"]) if w["kind"] == "function" else VertexSet.of(n, w["members"])
    bd = _breakdown_from(n, d["breakdown"]) if d.get("breakdown") else None
    res = InvariantResult(Invariant(d["invariant"]), d["value"], witness, Method(d["method"]), bd)
    return TimedResult(res, d.get("elapsed_ms", 0.0))


def _graph_dict(g: Graph, source: str = "") -> dict:
    return {"n": g.n, "edge_list": [list(e) for e in g.edges], "source": source}


def counterexample_to_dict(c: Counterexample) -> dict:
    return {
        "graph": _graph_dict(c.graph),
        "values": dict(c.values),
        "witnesses": {k: list(v) for k, v in c.witnesses.items()},
        "evidence": {k: list(v) for k, v in c.evidence.items()},
    }


def _counterexample_from(d: dict) -> Counterexample:
    g = Graph(d["graph"]["n"], [tuple(e) for e in d["graph"]["edge_list"]])
    return Counterexample(
        g,
        dict(d["values"]),
        {k: tuple(v) for k, v in d["witnesses"].items()},
        {k: tuple(v) for k, v in d.get("evidence", {}).items()},
    )


def outcome_to_dict(o: CheckOutcome, elapsed_ms: float = 0.0) -> dict:
    return {
        "id": o.id,
        "status": o.status.value,
        "lhs": _num(o.lhs),
        "rhs": _num(o.rhs),
        "detail": o.detail,
        "direction": o.direction,
        "counterexample": counterexample_to_dict(o.counterexample) if o.counterexample else None,
        "elapsed_ms": elapsed_ms,
    }


def _outcome_from(d: dict) -> TimedCheck:
    cx = _counterexample_from(d["counterexample"]) if d.get("counterexample") else None
    o = CheckOutcome(d["id"], Status(d["status"]), _unnum(d.get("lhs")), _unnum(d.get("rhs")),
                     d.get("detail", ""), d.get("direction"), cx)
    return TimedCheck(o, d.get("elapsed_ms", 0.0))


def report_to_dict(r: Report) -> dict:
    return {
        "schema_version": r.schema_version,
        "graph": _graph_dict(r.graph, r.source),
        "results": [result_to_dict(t.result, t.elapsed_ms) for t in r.results],
        "checks": [outcome_to_dict(t.outcome, t.elapsed_ms) for t in r.checks],
    }


def report_from_dict(d: dict) -> Report:
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported report schema {d.get('schema_version')!r}")
    gd = d["graph"]
    g = Graph(gd["n"], [tuple(e) for e in gd["edge_list"]])
    return Report(
        graph=g,
        source=gd.get("source", ""),
        results=tuple(_result_from(g.n, x) for x in d.get("results", [])),
        checks=tuple(_outcome_from(x) for x in d.get("checks", [])),
    )


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def report_to_json(r: Report) -> str:
    return dumps(report_to_dict(r))


def report_from_json(text: str) -> Report:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", offset=exc.pos) from None
    return report_from_dict(data)


CSV_COLUMNS = ("graph_id", "invariant", "value", "witness_kind", "witness")


def results_to_csv(rows: list[tuple[str, InvariantResult]]) -> str:
    """One invariant per row; witness entries joined with ';' (members or the weight vector)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for graph_id, r in rows:
        if isinstance(r.witness, WeightFunction):
            kind, items = "function", r.witness.weights
        else:
            kind, items = "set", r.witness.sorted()
        writer.writerow([graph_id, r.invariant.value, r.value, kind, ";".join(map(str, items))])
    return buf.getvalue()

