"""Exact strong differential and domination-invariant solvers with a checkable theorem registry."""

from __future__ import annotations

from .errors import (
    EmptyGraph,
    InvalidArgument,
    InvalidSpec,
    InvalidVertex,
    NotATree,
    ParseError,
    SizeGuardExceeded,
    StrongDiffError,
    UndefinedInvariant,
    UnknownTheorem,
)
from .graph import DifferentialBreakdown, Graph, VertexSet, WeightFunction, breakdown
from .solvers import Invariant, InvariantResult, Method, SolverConfig, oracle, solve

__version__ = "0.1.0"

__all__ = [
    "DifferentialBreakdown",
    "EmptyGraph",
    "Graph",
    "Invariant",
    "InvariantResult",
    "InvalidArgument",
    "InvalidSpec",
    "InvalidVertex",
    "Method",
    "NotATree",
    "ParseError",
    "SizeGuardExceeded",
    "SolverConfig",
    "StrongDiffError",
    "UndefinedInvariant",
    "UnknownTheorem",
    "VertexSet",
    "WeightFunction",
    "breakdown",
    "oracle",
    "solve",
]
