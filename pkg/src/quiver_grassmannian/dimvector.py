"""Dimension vectors and signed vectors indexed by the vertices ``1..n``.

Position ``i - 1`` of a vector holds the entry for vertex ``i``.
"""

from itertools import product

from quiver_grassmannian.errors import DimensionMismatchError, VertexError


DimVector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


def check_length(d: DimVector, n: int, what: str = "vector") -> DimVector:
    """Return ``d`` as a tuple, raising if it does not have ``n`` entries."""
    d = tuple(int(x) for x in d)
    if len(d) != n:
        raise DimensionMismatchError(f"{what} {format_vector(d)} has {len(d)} entries, expected {n}")
    return d


def check_vertex(i: int, n: int) -> int:
    if not 1 <= i <= n:
        raise VertexError(f"vertex {i} is not in 1..{n}")
    return i


def zero(n: int) -> DimVector:
    return (0,) * n


def unit(n: int, i: int) -> DimVector:
    """The simple root alpha_i."""
    check_vertex(i, n)
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def add(a: DimVector, b: DimVector) -> DimVector:
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot add {format_vector(a)} and {format_vector(b)}")
    return tuple(x + y for x, y in zip(a, b))


def sub(a: DimVector, b: DimVector) -> DimVector:
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot subtract {format_vector(b)} from {format_vector(a)}")
    return tuple(x - y for x, y in zip(a, b))


def neg(a: DimVector) -> DimVector:
    return tuple(-x for x in a)


def leq(a: DimVector, b: DimVector) -> bool:
    """Componentwise ``a <= b``."""
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot compare {format_vector(a)} and {format_vector(b)}")
    return all(x <= y for x, y in zip(a, b))


def is_nonnegative(a: DimVector) -> bool:
    return all(x >= 0 for x in a)


def is_positive(a: DimVector) -> bool:
    """Non-negative and nonzero."""
    return is_nonnegative(a) and any(a)


def mat_vec(m: IntMatrix, d: DimVector) -> DimVector:
    return tuple(sum(row[j] * d[j] for j in range(len(d))) for row in m)


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m)) if m else ()


def box(d: DimVector) -> list[DimVector]:
    """All ``e`` with ``0 <= e <= d``, ordered by total degree then lexicographically."""
    if not is_nonnegative(d):
        raise DimensionMismatchError(f"box of {format_vector(d)} needs a non-negative vector")
    points = list(product(*(range(x + 1) for x in d)))
    points.sort(key=lambda e: (sum(e), e))
    return points


def parse_vector(text: str, n: int | None = None) -> DimVector:
    """Parse ``"1,0,1"`` (surrounding parentheses allowed)."""
    cleaned = text.strip().strip("()[]")
    try:
        d = tuple(int(x) for x in cleaned.split(",") if x.strip())
    except ValueError as e:
        raise DimensionMismatchError(f"not a vector of integers: {text!r}") from e
    if not d:
        raise DimensionMismatchError(f"empty vector: {text!r}")
    if n is not None:
        check_length(d, n)
    return d


def format_vector(d: DimVector) -> str:
    return "(" + ",".join(str(x) for x in d) + ")"
