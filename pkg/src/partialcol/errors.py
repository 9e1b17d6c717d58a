"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or out-of-range input (bad vertex id, overlapping sets...)."""


class GraphFormatError(InputError):
    """A graph or revenue file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ValueError):
    """A solution is improper or uses a zero-revenue color."""

    def __init__(self, message: str, vertex: int | None = None):
        self.vertex = vertex
        super().__init__(message)


class ClassViolation(Exception):
    """The input graph is outside the (bull, E)-free class.

    Raised where a structural claim that holds on every graph of the class
    turns out to be false. ``vertex`` / ``witness`` carry whatever evidence
    the raising routine had at hand; a forbidden-pattern embedding can be
    recovered afterwards with :func:`partialcol.patterns.class_membership`.
    """

    def __init__(self, message: str, vertex: int | None = None, witness=None):
        self.vertex = vertex
        self.witness = witness
        super().__init__(message)


class StructureViolation(ClassViolation):
    """A fat path / fat cycle adjacency requirement failed."""


class ResourceLimitError(RuntimeError):
    """Exhaustive search exceeded its configured budget."""


class InvariantViolation(AssertionError):
    """An internal consistency check failed; this always signals a bug."""
