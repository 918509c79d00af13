"""
Exception hierarchy for the list homomorphism solver.
Every error carries the CLI exit code it maps to.
"""

from typing import Iterable, Tuple

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_NOT_IN_CLASS = 2
EXIT_USAGE = 3


class ListHomError(Exception):
    """Base class for all solver errors."""

    exit_code = EXIT_USAGE


class InvalidInput(ListHomError, ValueError):
    """Malformed graph, list mapping, generator settings or parameter."""


class NotConnected(ListHomError):
    """A connected graph was required but some vertex is unreachable."""


class SizeLimitExceeded(ListHomError):
    """An exponential routine was asked to run above its configured cap."""


class InternalError(ListHomError, RuntimeError):
    """An internal precondition was violated."""


class NotInClass(ListHomError):
    """
    A connected induced subgraph without a multi-chain ordering was met
    where the configuration-graph machinery needed one.

    Attributes:
        vertices: the offending subgraph, in the caller's vertex indexing
    """

    exit_code = EXIT_NOT_IN_CLASS

    def __init__(self, vertices: Iterable[int], message: str = ""):
        self.vertices: Tuple[int, ...] = tuple(vertices)
        super().__init__(
            message or f"No multi-chain ordering for the connected subgraph on {list(self.vertices)}"
        )

    def lifted(self, index_map) -> "NotInClass":
        """Return the same error with vertices translated through index_map (new -> old)."""
        return NotInClass((index_map[v] for v in self.vertices), "")
