"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class StrongDiffError(Exception):
    """Base class for all package errors."""


class InvalidVertex(StrongDiffError, IndexError):
    pass


class InvalidArgument(StrongDiffError, ValueError):
    pass


class UndefinedInvariant(StrongDiffError, ValueError):
    """The invariant is not defined on this graph (e.g. semitotal with isolated vertices)."""


class EmptyGraph(StrongDiffError, ValueError):
    pass


class SizeGuardExceeded(StrongDiffError):
    def __init__(self, n: int, limit: int, what: str = "solver") -> None:
        super().__init__(f"{what}: n={n} exceeds size guard {limit}")
        self.n = n
        self.limit = limit


class InvalidSpec(StrongDiffError, ValueError):
    pass


class NotATree(StrongDiffError, ValueError):
    pass


class UnknownTheorem(StrongDiffError, KeyError):
    def __str__(self) -> str:
        return f"unknown theorem id: {self.args[0]!r}"


class ParseError(StrongDiffError, ValueError):
    """Malformed graph text. Carries the byte offset (graph6) or line number (edge list)."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None) -> None:
        where = ""
        if offset is not None:
            where = f" at byte {offset}"
        elif line is not None:
            where = f" on line {line}"
        super().__init__(message + where)
        self.offset = offset
        self.line = line
