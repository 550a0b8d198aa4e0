"""Exception hierarchy for quiver computations.

Every domain error is a ``ValueError`` so callers that only know the builtin
still catch them; the CLI maps them to exit code 1.
"""


class QuiverError(ValueError):
    """Base class for all domain errors raised by this package."""


class DiagramMismatchError(QuiverError):
    """The arrows of a quiver do not match the requested Dynkin diagram."""


class DimensionMismatchError(QuiverError):
    """Vectors, polynomials or representations of incompatible sizes."""


class VertexError(QuiverError):
    """A vertex label outside ``1..n``."""


class NotARootError(QuiverError):
    """A dimension vector that is not a positive root of the diagram."""


class ProjectiveVertexError(QuiverError):
    """An operation that needs a non-projective (or a projective) vertex got the other kind."""


class KnittingError(QuiverError):
    """Internal inconsistency while knitting the Auslander-Reiten quiver."""


class InconsistentTableError(QuiverError):
    """A Hom/Ext or F-polynomial table violates one of its invariants."""


class DivisionRemainderError(QuiverError):
    """Exact polynomial division left a nonzero remainder."""

    def __init__(self, message: str, term: tuple[tuple[int, ...], int] | None = None):
        super().__init__(message)
        self.term = term


class CohomologyViolationError(QuiverError):
    """A Poincare polynomial with odd exponents, negative coefficients or negative powers."""


class DuplicateClusterVariableError(QuiverError):
    """Two indecomposables produced the same cluster variable."""


class OracleBudgetError(QuiverError):
    """Subspace enumeration would exceed the configured budget."""


class FixtureError(QuiverError):
    """Malformed quiver description or representation file."""


class UsageError(QuiverError):
    """Bad command-line usage."""
