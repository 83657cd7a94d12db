"""Serialization: graph6, edge lists, JSON reports and CSV."""

from __future__ import annotations

from .edgelist import parse_edgelist, write_edgelist
from .graph6 import parse_graph6, write_graph6
from .report import (
    SCHEMA_VERSION,
    Report,
    TimedCheck,
    TimedResult,
    breakdown_to_dict,
    report_from_dict,
    report_from_json,
    report_to_dict,
    report_to_json,
    results_to_csv,
)

__all__ = [
    "SCHEMA_VERSION",
    "Report",
    "TimedCheck",
    "TimedResult",
    "breakdown_to_dict",
    "parse_edgelist",
    "parse_graph6",
    "report_from_dict",
    "report_from_json",
    "report_to_dict",
    "report_to_json",
    "results_to_csv",
    "write_edgelist",
    "write_graph6",
]
