"""
Exception hierarchy shared by all engines.
"""
from typing import Optional


class BuckfireError(Exception):
    """Base class for every error raised by this package."""


# Graph errors

class GraphError(BuckfireError, ValueError):
    """A board is malformed."""


class DisconnectedGraphError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class StartOutOfRangeError(GraphError):
    pass


class NonDenseVertexError(GraphError):
    """Vertex indices do not cover [0, vertex_count)."""


class InvalidTreeSpecError(GraphError):
    pass


class LevelsUnavailableError(GraphError):
    """A level-indexed operation was asked of a board without levels."""


class GraphParseError(GraphError):
    """Graph text could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


# Abacus errors

class AbacusError(BuckfireError):
    pass


class NotLoadedError(AbacusError):
    pass


class CapExceededError(AbacusError):
    pass


class EmptyRunError(AbacusError):
    pass


# Markov errors

class MarkovError(BuckfireError):
    pass


class MalformedBlockStructureError(MarkovError):
    pass


class SingularMatrixError(MarkovError):
    pass


# Closed-form errors

class ClosedFormError(BuckfireError):
    pass


class LevelOutOfRangeError(ClosedFormError, ValueError):
    pass


class ClosedFormUnavailableError(ClosedFormError):
    """Closed forms exist only for complete k-ary trees."""


class EngineDisagreementError(BuckfireError):
    """Exact engines produced different answers."""
