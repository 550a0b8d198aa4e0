"""g-vectors and the Caldero-Chapoton map.

    CC(M) = sum_e chi(Gr_e(M)) x^{B e + g_M} = F_M(x^{B^1}, ..., x^{B^n}) x^{g_M}

with g_M = -H dim M, B^i the i-th column of the exchange matrix.
"""

import logging

from quiver_grassmannian.ar_quiver import injective_vertex
from quiver_grassmannian.dimvector import DimVector, format_vector, mat_vec, neg, transpose
from quiver_grassmannian.errors import DuplicateClusterVariableError
from quiver_grassmannian.grassmann import FTable
from quiver_grassmannian.homalg import as_module
from quiver_grassmannian.models.ar import ARQuiver, ARVertex
from quiver_grassmannian.models.module import ModuleExpr
from quiver_grassmannian.models.quiver import QuiverMatrices
from quiver_grassmannian.models.reports import ExchangeReport, RelationCheck
from quiver_grassmannian.polyring import LaurentPolynomial, laurent_eval_substitute


logger = logging.getLogger(__name__)

GVector = tuple[int, ...]


def _dim(m) -> DimVector:
    if isinstance(m, ModuleExpr):
        return m.dim
    if isinstance(m, ARVertex):
        return m.dim
    return tuple(m)


def g_vector(mats: QuiverMatrices, m) -> GVector:
    """Index of m: -H dim m. Accepts a module, a vertex or a bare dimension vector."""
    return neg(mat_vec(mats.H, _dim(m)))


def coindex(mats: QuiverMatrices, m) -> GVector:
    """-H^t dim m; equals -g_{tau M} for a non-projective indecomposable M."""
    return neg(mat_vec(transpose(mats.H), _dim(m)))


def tau_g_vector(mats: QuiverMatrices, g: GVector) -> GVector:
    """g_{tau M} = -C^{-1} C^t g_M, using C^{-1} = H^t."""
    return neg(mat_vec(transpose(mats.H), mat_vec(transpose(mats.C), g)))


def _columns(mats: QuiverMatrices) -> list[tuple[int, ...]]:
    return [tuple(row[i] for row in mats.B) for i in range(mats.n)]


def cc(ar: ARQuiver, ft: FTable, mats: QuiverMatrices, m) -> LaurentPolynomial:
    """CC(m) as an exact Laurent polynomial in x_1..x_n."""
    m = as_module(ar, m)
    if m.is_zero():
        return LaurentPolynomial.one(ar.n)
    return laurent_eval_substitute(ft.polynomial(m), _columns(mats), g_vector(mats, m))


def initial_variables(n: int) -> list[LaurentPolynomial]:
    return [LaurentPolynomial.variable(n, i) for i in range(1, n + 1)]


def cluster_variables(ar: ARQuiver, ft: FTable, mats: QuiverMatrices) -> dict[str, LaurentPolynomial]:
    """x_1..x_n followed by CC(M) for every indecomposable, keyed by label."""
    result: dict[str, LaurentPolynomial] = {}
    seen: dict[LaurentPolynomial, str] = {}
    entries = [(f"x{i}", x) for i, x in enumerate(initial_variables(ar.n), start=1)]
    entries += [(v.label, cc(ar, ft, mats, v)) for v in ar.vertices]
    for label, poly in entries:
        if poly in seen:
            raise DuplicateClusterVariableError(f"{label} and {seen[poly]} both give {poly}")
        seen[poly] = label
        result[label] = poly
    return result


def rank_one_components(ar: ARQuiver) -> list[int]:
    return [members[0] for component, members in ar.quiver.component_vertices() if component.rank == 1]


def _check(kind: str, subject: str, residual: LaurentPolynomial) -> RelationCheck:
    detail = "" if residual.is_zero() else f"residual {residual}"
    return RelationCheck(kind=kind, subject=subject, passed=residual.is_zero(), detail=detail)


def _vector_check(kind: str, subject: str, residual: GVector) -> RelationCheck:
    passed = not any(residual)
    return RelationCheck(
        kind=kind, subject=subject, passed=passed, detail="" if passed else f"residual {format_vector(residual)}"
    )


def mesh_checks(ar: ARQuiver, ft: FTable, mats: QuiverMatrices) -> list[RelationCheck]:
    """CC(tau M) CC(M) - CC(E) - 1 == 0 for every almost split sequence."""
    one = LaurentPolynomial.one(ar.n)
    checks = []
    for mesh in ar.meshes:
        middle = one
        for e in mesh.middle:
            middle = middle * cc(ar, ft, mats, e)
        residual = cc(ar, ft, mats, mesh.tail) * cc(ar, ft, mats, mesh.head) - middle - one
        checks.append(_check("mesh", mesh.head.label, residual))
    return checks


def injective_checks(ar: ARQuiver, ft: FTable, mats: QuiverMatrices) -> list[RelationCheck]:
    """CC(I_k) x_k - prod_{k->i} x_i prod_{j->k} CC(I_j) - 1 == 0 for every vertex k."""
    q = ar.quiver
    xs = initial_variables(ar.n)
    one = LaurentPolynomial.one(ar.n)
    checks = []
    for k in q.vertices:
        rhs = one
        for i in q.successors[k]:
            rhs = rhs * xs[i - 1]
        for j in q.predecessors[k]:
            rhs = rhs * cc(ar, ft, mats, injective_vertex(ar, j))
        residual = cc(ar, ft, mats, injective_vertex(ar, k)) * xs[k - 1] - rhs - one
        checks.append(_check("injective", f"I_{k}", residual))
    return checks


def g_vector_checks(ar: ARQuiver, mats: QuiverMatrices) -> list[RelationCheck]:
    """g_M + g_{tau M} + B dim M == 0 and g_{tau M} == -C^{-1} C^t g_M for non-projective M."""
    checks = []
    for mesh in ar.meshes:
        m, t = mesh.head, mesh.tail
        gm, gt = g_vector(mats, m), g_vector(mats, t)
        bd = mat_vec(mats.B, m.dim)
        checks.append(_vector_check("g_vector", m.label, tuple(a + b + c for a, b, c in zip(gm, gt, bd))))
        predicted = tau_g_vector(mats, gm)
        checks.append(_vector_check("g_tau", m.label, tuple(a - b for a, b in zip(predicted, gt))))
    return checks


def verify_exchange(ar: ARQuiver, ft: FTable, mats: QuiverMatrices) -> ExchangeReport:
    rank_one = rank_one_components(ar)
    if rank_one:
        logger.warning(
            "rank-one components at vertices %s: CC(S) is the literal 2/x there", rank_one
        )
    checks = mesh_checks(ar, ft, mats) + injective_checks(ar, ft, mats) + g_vector_checks(ar, mats)
    report = ExchangeReport(quiver=ar.quiver.type_label, checks=checks, rank_one_components=rank_one)
    logger.debug("exchange checks for %s: %s", report.quiver, report.counts())
    return report
