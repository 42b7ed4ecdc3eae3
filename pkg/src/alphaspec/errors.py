"""Exception taxonomy shared by the whole package.

Every error raised on purpose derives from :class:`AlphaspecError`, so callers
(CLI, service) can map failures to exit codes / HTTP statuses by name.
"""

from __future__ import annotations


class AlphaspecError(Exception):
    """Base class for all package errors."""


class EdgeArityError(AlphaspecError):
    """An edge does not have exactly k distinct vertices."""


class VertexRangeError(AlphaspecError):
    """An edge mentions a vertex outside range(n)."""


class DuplicateEdgeError(AlphaspecError):
    """The same k-set appears twice in an edge list."""


class BadParamsError(AlphaspecError):
    """Structurally invalid parameters for a constructor or formula."""


class UniformityMismatchError(AlphaspecError):
    """Two hypergraphs that must share k do not."""


class DimensionMismatchError(AlphaspecError):
    """A weight vector's length differs from the vertex count."""


class BadAlphaError(AlphaspecError):
    """The norm exponent alpha is out of range (alpha >= 1 required)."""


class NotAutomorphismError(AlphaspecError):
    """A requested vertex transposition does not preserve the edge set."""


class NotVertexUniformError(AlphaspecError):
    """Uniform-weight closed form applied to a hypergraph whose
    transposition-automorphism partition has more than one block."""


class BoundVoidError(AlphaspecError):
    """Vertex-deletion bound requested at a vertex where it is vacuous
    (w_u^alpha >= 1/k)."""


class SearchTooLargeError(AlphaspecError):
    """An exhaustive search exceeds the guard size and was not forced."""

    def __init__(self, message: str, *, n: int, k: int, num_sets: int, guard: int):
        super().__init__(message)
        self.n = n
        self.k = k
        self.num_sets = num_sets
        self.guard = guard
