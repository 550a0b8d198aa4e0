"""Hom/Ext dimensions, degenerations and generic decompositions.

Every table is computed once per ARQuiver from the almost split sequences:
for a mesh 0 -> tau M -> E -> M -> 0 and an indecomposable X,

    [M, X] = [E, X] - [tau M, X] + (1 if X = tau M else 0)

with the base case [P_j, X] = (dim X)_j.
"""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from quiver_grassmannian.dimvector import DimVector, check_length, format_vector, is_nonnegative, leq, sub
from quiver_grassmannian.errors import DimensionMismatchError, InconsistentTableError
from quiver_grassmannian.models.ar import ARQuiver, ARVertex
from quiver_grassmannian.models.module import ModuleExpr
from quiver_grassmannian.quiver_core import euler_form


logger = logging.getLogger(__name__)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HomExtTable:
    """[X, Y] and [X, Y]^1 for all pairs of indecomposables, rows X and columns Y in AR order."""

    labels: tuple[str, ...]
    dims: tuple[DimVector, ...]
    hom: Table
    ext: Table


def as_module(ar: ARQuiver, x: ModuleExpr | ARVertex | Iterable[ARVertex]) -> ModuleExpr:
    if isinstance(x, ModuleExpr):
        if x.n != ar.n:
            raise DimensionMismatchError(f"module over {x.n} vertices used with a quiver on {ar.n}")
        return x
    if isinstance(x, ARVertex):
        return ModuleExpr.of(ar.n, [x])
    return ModuleExpr.of(ar.n, x)


def _hom_rows(ar: ARQuiver) -> Table:
    size = len(ar.vertices)
    table = [[0] * size for _ in range(size)]
    for a, m in enumerate(ar.vertices):
        if m.is_projective:
            for b, x in enumerate(ar.vertices):
                table[a][b] = x.dim[m.orbit - 1]
            continue
        mesh = ar.mesh_ending_at(m)
        tail = ar.position(mesh.tail)
        middle = [ar.position(e) for e in mesh.middle]
        for b in range(size):
            value = sum(table[e][b] for e in middle) - table[tail][b]
            if b == tail:
                value += 1
            table[a][b] = value
    logger.debug("hom table for %s: %d x %d", ar.quiver.type_label, size, size)
    return tuple(tuple(row) for row in table)


def hom_table(ar: ARQuiver) -> Table:
    return ar.cached("hom", lambda: _hom_rows(ar))


def _ext_rows(ar: ARQuiver) -> Table:
    hom = hom_table(ar)
    rows = []
    for a, x in enumerate(ar.vertices):
        row = []
        for b, y in enumerate(ar.vertices):
            value = hom[a][b] - euler_form(ar.quiver, x.dim, y.dim)
            if value < 0:
                raise InconsistentTableError(f"negative Ext^1({x.label}, {y.label}) = {value}")
            row.append(value)
        rows.append(tuple(row))
    return tuple(rows)


def ext_table(ar: ARQuiver) -> Table:
    return ar.cached("ext", lambda: _ext_rows(ar))


def hom_ext_table(ar: ARQuiver) -> HomExtTable:
    return HomExtTable(
        labels=tuple(v.label for v in ar.vertices),
        dims=tuple(v.dim for v in ar.vertices),
        hom=hom_table(ar),
        ext=ext_table(ar),
    )


def hom_dim(ar: ARQuiver, x, y) -> int:
    """dim Hom_Q(x, y), bilinear over direct sums."""
    x, y = as_module(ar, x), as_module(ar, y)
    table = hom_table(ar)
    return sum(
        mx * my * table[ar.position(a)][ar.position(b)] for a, mx in x.summands for b, my in y.summands
    )


def ext_dim(ar: ARQuiver, x, y) -> int:
    """dim Ext^1_Q(x, y) = [x, y] - <dim x, dim y>."""
    x, y = as_module(ar, x), as_module(ar, y)
    value = hom_dim(ar, x, y) - euler_form(ar.quiver, x.dim, y.dim)
    if value < 0:
        raise InconsistentTableError(f"negative Ext^1({x.describe()}, {y.describe()}) = {value}")
    return value


def is_rigid(ar: ARQuiver, m) -> bool:
    return ext_dim(ar, m, m) == 0


def _same_dim(m: ModuleExpr, n: ModuleExpr) -> None:
    if m.dim != n.dim:
        raise DimensionMismatchError(
            f"degeneration needs equal dimension vectors, got {format_vector(m.dim)} and {format_vector(n.dim)}"
        )


def degeneration_leq(ar: ARQuiver, m, n) -> bool:
    """m <=_deg n, i.e. [X, m] <= [X, n] for every indecomposable X."""
    m, n = as_module(ar, m), as_module(ar, n)
    _same_dim(m, n)
    return all(hom_dim(ar, x, m) <= hom_dim(ar, x, n) for x in ar.vertices)


def degeneration_leq_dual(ar: ARQuiver, m, n) -> bool:
    """The equivalent test [m, X] <= [n, X] for every indecomposable X."""
    m, n = as_module(ar, m), as_module(ar, n)
    _same_dim(m, n)
    return all(hom_dim(ar, m, x) <= hom_dim(ar, n, x) for x in ar.vertices)


def generic_decomposition(ar: ARQuiver, d: DimVector) -> ModuleExpr:
    """The rigid module of dimension d as a multiset of positive roots.

    Backtracks over the indecomposables in decreasing AR order, keeping only
    summands that are Ext-orthogonal in both directions to those already chosen.
    """
    d = check_length(d, ar.n, "d")
    if not is_nonnegative(d):
        raise DimensionMismatchError(f"{format_vector(d)} is not a dimension vector")
    key = f"generic:{d}"
    return ar.cached(key, lambda: _search_generic(ar, d))


def _search_generic(ar: ARQuiver, d: DimVector) -> ModuleExpr:
    ext = ext_table(ar)
    size = len(ar.vertices)
    candidates = list(range(size - 1, -1, -1))
    dims = [v.dim for v in ar.vertices]
    failed: set[tuple[DimVector, int, frozenset[int]]] = set()

    def search(remaining: DimVector, start: int, chosen: tuple[int, ...]) -> tuple[int, ...] | None:
        if not any(remaining):
            return chosen
        distinct = frozenset(chosen)
        state = (remaining, start, distinct)
        if state in failed:
            return None
        for pos in range(start, size):
            idx = candidates[pos]
            if not leq(dims[idx], remaining):
                continue
            if any(ext[idx][c] or ext[c][idx] for c in distinct):
                continue
            found = search(sub(remaining, dims[idx]), pos, chosen + (idx,))
            if found is not None:
                return found
        failed.add(state)
        return None

    chosen = search(d, 0, ())
    if chosen is None:
        raise InconsistentTableError(f"no Ext-orthogonal decomposition of {format_vector(d)}")
    module = ModuleExpr.of(ar.n, [ar.vertices[idx] for idx in chosen])
    logger.debug("generic decomposition of %s: %s", format_vector(d), module.describe())
    return module


def root_decompositions(ar: ARQuiver, d: DimVector, limit: int | None = None) -> Iterator[ModuleExpr]:
    """Every way to write d as a sum of positive roots, one module per multiset."""
    d = check_length(d, ar.n, "d")
    size = len(ar.vertices)
    dims = [v.dim for v in ar.vertices]
    produced = 0

    def walk(remaining: DimVector, start: int, chosen: list[int]) -> Iterator[list[int]]:
        if not any(remaining):
            yield list(chosen)
            return
        for idx in range(start, size):
            if leq(dims[idx], remaining):
                chosen.append(idx)
                yield from walk(sub(remaining, dims[idx]), idx, chosen)
                chosen.pop()

    for chosen in walk(d, 0, []):
        yield ModuleExpr.of(ar.n, [ar.vertices[idx] for idx in chosen])
        produced += 1
        if limit is not None and produced >= limit:
            return


def _check_range(e: DimVector, d: DimVector) -> None:
    if not (is_nonnegative(e) and leq(e, d)):
        raise DimensionMismatchError(f"need 0 <= e <= d, got e={format_vector(e)}, d={format_vector(d)}")


def grassmannian_nonempty(ar: ARQuiver, e: DimVector, d: DimVector) -> bool:
    """Gr_e of the rigid module of dimension d is non-empty iff Ext^1(M_e, M_{d-e}) = 0."""
    e = check_length(e, ar.n, "e")
    d = check_length(d, ar.n, "d")
    _check_range(e, d)
    return ext_dim(ar, generic_decomposition(ar, e), generic_decomposition(ar, sub(d, e))) == 0


def generic_min_dimension(ar: ARQuiver, e: DimVector, d: DimVector) -> int | None:
    """<e, d-e> when Gr_e of the rigid module is non-empty, None when it is empty."""
    if not grassmannian_nonempty(ar, e, d):
        return None
    return euler_form(ar.quiver, e, sub(tuple(d), tuple(e)))


def stratum_dimension(ar: ARQuiver, n, m) -> int:
    """dim of the stratum of subrepresentations isomorphic to n inside Gr(m): [n, m] - [n, n]."""
    n, m = as_module(ar, n), as_module(ar, m)
    if not leq(n.dim, m.dim):
        raise DimensionMismatchError(
            f"dim {format_vector(n.dim)} does not fit inside dim {format_vector(m.dim)}"
        )
    return hom_dim(ar, n, m) - hom_dim(ar, n, n)


def tangent_space_dimension(ar: ARQuiver, sub_module, quotient) -> int:
    """Tangent space of Gr_e(M) at a point U with M/U = quotient: [U, M/U]."""
    return hom_dim(ar, sub_module, quotient)
