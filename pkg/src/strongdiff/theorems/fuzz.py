"""Run registry checks over a stream of graphs and aggregate the outcomes."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from ..errors import InvalidArgument
from ..families.generators import FamilySpec, format_spec, generate, parse_spec
from ..graph import Graph
from ..solvers import SolverConfig
from .profile import GraphProfile
from .registry import CheckOutcome, Status, TheoremCheck, evaluate, resolve_ids

StreamItem = Union[Graph, FamilySpec, str, tuple[str, Graph]]


@dataclass
class FuzzReport:
    graphs: int = 0
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    violations: list[tuple[str, CheckOutcome]] = field(default_factory=list)
    inconclusive: list[tuple[str, str]] = field(default_factory=list)
    witnesses_checked: int = 0
    witness_failures: list[tuple[str, str]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def total(self, status: Status) -> int:
        return sum(c.get(status.value, 0) for c in self.counts.values())

    @property
    def ok(self) -> bool:
        return not self.violations and not self.witness_failures


def _label(item: StreamItem, index: int) -> tuple[str, Graph]:
    if isinstance(item, tuple):
        return item
    if isinstance(item, Graph):
        return f"graph#{index}", item
    spec = parse_spec(item) if isinstance(item, str) else item
    return format_spec(spec), generate(spec)


def fuzz(
    stream: Iterable[StreamItem],
    ids: str | Sequence[str] | None = None,
    budget: int | None = None,
    cfg: SolverConfig | None = None,
    checks: Sequence[TheoremCheck] | None = None,
) -> FuzzReport:
    """Evaluate checks on up to ``budget`` graphs; ``checks`` overrides the registry lookup."""
    if budget is not None and budget < 1:
        raise InvalidArgument("budget must be >= 1")
    selected = list(checks) if checks is not None else resolve_ids(ids)
    report = FuzzReport(counts={c.id: {s.value: 0 for s in Status} for c in selected})
    start = time.perf_counter()
    for index, item in enumerate(stream):
        if budget is not None and index >= budget:
            break
        source, g = _label(item, index)
        profile = GraphProfile(g, cfg)
        for chk in selected:
            outcome = evaluate(chk, profile)
            report.counts[chk.id][outcome.status.value] += 1
            if outcome.status is Status.VIOLATED:
                report.violations.append((source, outcome))
            elif outcome.status is Status.INCONCLUSIVE:
                report.inconclusive.append((source, chk.id))
        report.graphs += 1
        report.witnesses_checked += len(profile.results)
        report.witness_failures += [(source, inv.value) for inv in profile.witness_failures]
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report
