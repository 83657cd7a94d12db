"""Executable theorem registry and the fuzz harness that runs it."""

from __future__ import annotations

from .fuzz import FuzzReport, fuzz
from .profile import GraphProfile
from .registry import (
    CheckOutcome,
    ClaimKind,
    Counterexample,
    Status,
    TheoremCheck,
    Verdict,
    check,
    evaluate,
    get_check,
    literal_table_readings,
    registry,
    resolve_ids,
)

__all__ = [
    "CheckOutcome",
    "ClaimKind",
    "Counterexample",
    "FuzzReport",
    "GraphProfile",
    "Status",
    "TheoremCheck",
    "Verdict",
    "check",
    "evaluate",
    "fuzz",
    "get_check",
    "literal_table_readings",
    "registry",
    "resolve_ids",
]
