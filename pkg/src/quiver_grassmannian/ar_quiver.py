"""Knitting the Auslander-Reiten quiver of a Dynkin quiver."""

import logging
from functools import lru_cache

from quiver_grassmannian.dimvector import DimVector, add, check_length, format_vector, is_positive, sub
from quiver_grassmannian.errors import KnittingError, NotARootError, ProjectiveVertexError, VertexError
from quiver_grassmannian.models.ar import AlmostSplitSequence, ARQuiver, ARVertex, VertexKey
from quiver_grassmannian.models.quiver import Quiver
from quiver_grassmannian.quiver_core import coxeter_apply, euler_form, matrices, positive_roots, slice_order


logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def knit(q: Quiver) -> ARQuiver:
    """Build every indecomposable slice by slice from the mesh relations.

    dim M(i;k+1) = sum_{j->i} dim M(j;k) + sum_{i->j} dim M(j;k+1) - dim M(i;k),
    with vertices that do not exist counting as zero. An orbit stops at the
    first vertex whose dimension vector is a row of C (an injective).
    """
    mats = matrices(q)
    n = q.n
    injective_dims = {mats.injective_dim(k) for k in q.vertices}
    roots = set(positive_roots(q))
    order_in_slice = slice_order(q)
    zero = (0,) * n

    dims: dict[VertexKey, DimVector] = {(i, 0): mats.projective_dim(i) for i in q.vertices}
    last: dict[int, int] = {}
    order: list[VertexKey] = [(i, 0) for i in order_in_slice]
    meshes: list[tuple[VertexKey, list[VertexKey], VertexKey]] = []

    active = list(order_in_slice)
    k = 0
    while active:
        still_active = []
        for i in active:
            current = dims[(i, k)]
            if current in injective_dims:
                last[i] = k
                continue
            middle = [(j, k) for j in q.predecessors[i] if (j, k) in dims]
            middle += [(j, k + 1) for j in q.successors[i] if (j, k + 1) in dims]
            would_be = zero
            for key in middle:
                would_be = add(would_be, dims[key])
            would_be = sub(would_be, current)
            if not is_positive(would_be) or would_be not in roots:
                raise KnittingError(
                    f"M({i};{k}) dim={format_vector(current)} is not injective but its "
                    f"translate {format_vector(would_be)} is not a positive root"
                )
            if coxeter_apply(q, would_be) != current:
                raise KnittingError(
                    f"Coxeter check failed at M({i};{k + 1}): Phi*{format_vector(would_be)} "
                    f"!= {format_vector(current)}"
                )
            dims[(i, k + 1)] = would_be
            order.append((i, k + 1))
            meshes.append(((i, k), middle, (i, k + 1)))
            still_active.append(i)
        active = still_active
        k += 1

    vertices = {
        key: ARVertex(
            orbit=key[0],
            slice=key[1],
            dim=dims[key],
            is_projective=key[1] == 0,
            is_injective=key[1] == last[key[0]],
        )
        for key in order
    }
    if len(vertices) != len(roots) or {v.dim for v in vertices.values()} != roots:
        raise KnittingError(
            f"knitted {len(vertices)} indecomposables but {q.type_label} has {len(roots)} positive roots"
        )

    arrows = []
    for i, k in order:
        for j in q.predecessors[i]:
            if (j, k) in vertices:
                arrows.append(((i, k), (j, k)))
        for j in q.successors[i]:
            if (j, k + 1) in vertices:
                arrows.append(((i, k), (j, k + 1)))

    ar = ARQuiver(
        quiver=q,
        vertices=tuple(vertices[key] for key in order),
        meshes=tuple(
            AlmostSplitSequence(
                tail=vertices[tail],
                middle=tuple(vertices[m] for m in middle),
                head=vertices[head],
            )
            for tail, middle, head in meshes
        ),
        arrows=tuple(arrows),
    )
    logger.debug("knitted %s: %d vertices, %d meshes", q.type_label, len(ar.vertices), len(ar.meshes))
    return ar


def mesh_of(ar: ARQuiver, head: ARVertex) -> AlmostSplitSequence:
    """The almost split sequence ending at ``head``."""
    mesh = ar.mesh_ending_at(head)
    if mesh is None:
        if head.is_projective:
            raise ProjectiveVertexError(f"{head.label} is projective and has no almost split sequence")
        raise VertexError(f"{head.label} is not a vertex of this AR-quiver")
    return mesh


def vertex_by_dim(ar: ARQuiver, d: DimVector) -> ARVertex:
    d = check_length(d, ar.n)
    v = ar.find_dim(d)
    if v is None:
        hint = "" if euler_form(ar.quiver, d, d) == 1 else f", <d,d> = {euler_form(ar.quiver, d, d)}"
        raise NotARootError(f"{format_vector(d)} is not a positive root of {ar.quiver.type_label}{hint}")
    return v


def tau(ar: ARQuiver, v: ARVertex) -> ARVertex | None:
    """The AR translate; None for a projective."""
    if v.is_projective:
        return None
    return ar.get(v.orbit, v.slice - 1)


def tau_inverse(ar: ARQuiver, v: ARVertex) -> ARVertex | None:
    """The inverse AR translate; None for an injective."""
    if v.is_injective:
        return None
    return ar.get(v.orbit, v.slice + 1)


def projective_vertex(ar: ARQuiver, i: int) -> ARVertex:
    v = ar.get(i, 0)
    if v is None:
        raise VertexError(f"vertex {i} is not in 1..{ar.n}")
    return v


def injective_vertex(ar: ARQuiver, k: int) -> ARVertex:
    """I_k, the indecomposable whose dimension vector is row k of C."""
    if not 1 <= k <= ar.n:
        raise VertexError(f"vertex {k} is not in 1..{ar.n}")
    return vertex_by_dim(ar, matrices(ar.quiver).injective_dim(k))
