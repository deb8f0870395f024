"""Exception types raised across the package."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all errors raised by :mod:`longcycle`."""


class InvalidVertex(GraphError, ValueError):
    pass


class SelfLoop(GraphError, ValueError):
    pass


class NoSuchEdge(GraphError, ValueError):
    pass


class InvalidParameter(GraphError, ValueError):
    pass


class NotSimple(GraphError, ValueError):
    """A construction would need parallel edges."""


class NotACummerbund(GraphError, ValueError):
    """The supplied cycle is not a longest cycle of the graph."""


class PatternTooLarge(GraphError, ValueError):
    pass


class UniverseTooLarge(GraphError):
    """Refusal to run an enumeration that the pruning filters cannot keep small."""


class FormatError(GraphError, ValueError):
    """Malformed graph6 or edge-list input; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SearchTimeout(GraphError):
    """A search exceeded its node-expansion budget; no value was produced."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} node expansions exhausted")
        self.budget = budget
