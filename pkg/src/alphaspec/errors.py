"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AlphaSpecError(Exception):
    """Base class for all errors raised by alphaspec."""


class InvalidOrderError(AlphaSpecError, ValueError):
    """A graph constructor received an order outside its domain."""


class ArityError(AlphaSpecError, ValueError):
    """A list argument has the wrong number of entries."""


class GraphStructureError(AlphaSpecError, ValueError):
    """An edge set violates the simple-graph invariants."""


class AlphaRangeError(AlphaSpecError, ValueError):
    """An alpha value lies outside [0, 1] (or outside a narrower required range)."""


class IntervalError(AlphaSpecError, ValueError):
    """An interval was specified with lo > hi."""


class NumericInputError(AlphaSpecError, ValueError):
    """A matrix handed to the eigensolver contains non-finite or asymmetric entries."""


class CapacityError(AlphaSpecError):
    """An exact algorithm was asked to handle a graph above its size cap."""


class ParseError(AlphaSpecError, ValueError):
    """Base class for text-format errors."""


class Graph6Error(ParseError):
    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


class EdgeListError(ParseError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ManifestError(ParseError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"manifest line {line}: {message}"
        super().__init__(message)
