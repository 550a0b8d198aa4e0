"""F-polynomials, Euler characteristics and Poincare polynomials of quiver Grassmannians.

Both tables are filled in AR order. For a mesh 0 -> tau M -> E -> M -> 0:

    F_M * F_{tau M} = F_E + y^{dim M}

and, for e != dim M, Gr_e(E) and Gr_e(M + tau M) share their Poincare
polynomial, which the direct-sum formula expands in terms of M and tau M.
"""

import logging
from dataclasses import dataclass, field
from itertools import product

from quiver_grassmannian.ar_quiver import vertex_by_dim
from quiver_grassmannian.dimvector import DimVector, box, check_length, format_vector, is_nonnegative, leq, sub
from quiver_grassmannian.errors import (
    CohomologyViolationError,
    DimensionMismatchError,
    InconsistentTableError,
    ProjectiveVertexError,
)
from quiver_grassmannian.homalg import as_module, is_rigid
from quiver_grassmannian.models.ar import ARQuiver, ARVertex, VertexKey
from quiver_grassmannian.models.module import ModuleExpr
from quiver_grassmannian.polyring import IntPolynomial, OneVarPolynomial, exact_divide


logger = logging.getLogger(__name__)

PoincareMap = dict[DimVector, OneVarPolynomial]

_ONE = OneVarPolynomial.one()
_ZERO = OneVarPolynomial.zero()


@dataclass(frozen=True)
class FTable:
    """F-polynomial of every indecomposable."""

    n: int
    polys: dict[VertexKey, IntPolynomial] = field(default_factory=dict)

    def of(self, v: ARVertex) -> IntPolynomial:
        return self.polys[v.key]

    def polynomial(self, m: ModuleExpr) -> IntPolynomial:
        """F of a direct sum is the product of the summands' F."""
        result = IntPolynomial.one(self.n)
        for v, mult in m.summands:
            for _ in range(mult):
                result = result * self.of(v)
        return result


@dataclass(frozen=True)
class PoincareTable:
    """P_{Gr_e(M)} for every indecomposable M and every 0 <= e <= dim M."""

    polys: dict[VertexKey, PoincareMap] = field(default_factory=dict)

    def of(self, v: ARVertex) -> PoincareMap:
        return self.polys[v.key]

    def get(self, v: ARVertex, e: DimVector) -> OneVarPolynomial:
        return self.polys[v.key].get(tuple(e), _ZERO)


def _euler(ar: ARQuiver, e: DimVector, d: DimVector) -> int:
    value = sum(x * y for x, y in zip(e, d))
    for s, t in ar.quiver.arrows:
        value -= e[s - 1] * d[t - 1]
    return value


def _successor_closed_subsets(ar: ARQuiver, support: list[int]) -> list[DimVector]:
    succ = ar.quiver.successors
    subsets = []
    for bits in product((0, 1), repeat=len(support)):
        chosen = {v for v, b in zip(support, bits) if b}
        if all(t in chosen for s in chosen for t in succ[s] if t in support):
            subsets.append(tuple(1 if i in chosen else 0 for i in ar.quiver.vertices))
    return subsets


def f_poly_projective(ar: ARQuiver, v: ARVertex) -> IntPolynomial:
    """Sum of y^e over successor-closed subsets e of the (thin) support of P_i."""
    if not v.is_projective:
        raise ProjectiveVertexError(f"{v.label} is not projective")
    if any(x > 1 for x in v.dim):
        raise InconsistentTableError(f"projective {v.label} dim={format_vector(v.dim)} is not thin")
    support = [i for i in ar.quiver.vertices if v.dim[i - 1]]
    return IntPolynomial.from_terms(ar.n, [(e, 1) for e in _successor_closed_subsets(ar, support)])


def _check_f(v: ARVertex, f: IntPolynomial) -> None:
    if f.constant_term() != 1 or f.coefficient(v.dim) != 1:
        raise InconsistentTableError(f"F of {v.label} must have constant and top coefficient 1: {f}")
    negative = [(exp, c) for exp, c in f.items if c < 0]
    if negative:
        exp, c = negative[0]
        raise CohomologyViolationError(f"F of {v.label} has negative coefficient {c} at y^{exp}")


def _build_f_table(ar: ARQuiver) -> FTable:
    polys: dict[VertexKey, IntPolynomial] = {}
    for v in ar.vertices:
        if v.is_projective:
            f = f_poly_projective(ar, v)
        else:
            mesh = ar.mesh_ending_at(v)
            numerator = IntPolynomial.monomial(v.dim)
            middle = IntPolynomial.one(ar.n)
            for e in mesh.middle:
                middle = middle * polys[e.key]
            f = exact_divide(middle + numerator, polys[mesh.tail.key])
        _check_f(v, f)
        polys[v.key] = f
    logger.debug("F-table for %s: %d polynomials", ar.quiver.type_label, len(polys))
    return FTable(n=ar.n, polys=polys)


def f_table(ar: ARQuiver) -> FTable:
    return ar.cached("ftable", lambda: _build_f_table(ar))


def f_polynomial(ft: FTable, m: ModuleExpr) -> IntPolynomial:
    return ft.polynomial(m)


def euler_char(ft: FTable, m: ModuleExpr, e: DimVector) -> int:
    """chi(Gr_e(m)): the coefficient of y^e in F_m."""
    e = check_length(e, ft.n, "e")
    value = ft.polynomial(m).coefficient(e)
    if value < 0:
        raise CohomologyViolationError(f"chi(Gr_{format_vector(e)}({m.describe()})) = {value} < 0")
    return value


def direct_sum_poincare(
    ar: ARQuiver,
    first: PoincareMap,
    first_dim: DimVector,
    second: PoincareMap,
    second_dim: DimVector,
    limit: DimVector | None = None,
    dual: bool = False,
) -> PoincareMap:
    """Poincare polynomials of Gr_e(N1 + N2) for all e (or all e <= limit).

    P_e = sum_{f+g=e} q^{2<f, dim N2 - g>} P_f(N1) P_g(N2); with ``dual`` the
    exponent is 2<g, dim N1 - f> instead. The first form holds when
    Ext^1(N1, N2) = 0, the dual one when Ext^1(N2, N1) = 0.
    """
    total = tuple(a + b for a, b in zip(first_dim, second_dim))
    top = total if limit is None else tuple(min(a, b) for a, b in zip(total, limit))
    result: PoincareMap = {}
    for e in box(top):
        acc = _ZERO
        for f in box(tuple(min(a, b) for a, b in zip(e, first_dim))):
            g = sub(e, f)
            if not leq(g, second_dim):
                continue
            pf, pg = first.get(f, _ZERO), second.get(g, _ZERO)
            if pf.is_zero() or pg.is_zero():
                continue
            if dual:
                exponent = 2 * _euler(ar, g, sub(first_dim, f))
            else:
                exponent = 2 * _euler(ar, f, sub(second_dim, g))
            acc = acc + (pf * pg).shift(exponent)
        if not acc.is_zero():
            result[e] = acc
    return result


def _check_poincare(label: str, e: DimVector, p: OneVarPolynomial) -> None:
    for k, c in p.items:
        if k < 0:
            raise CohomologyViolationError(f"P of Gr_{format_vector(e)}({label}) has q^{k}: {p}")
        if k % 2:
            raise CohomologyViolationError(f"P of Gr_{format_vector(e)}({label}) has odd power q^{k}: {p}")
        if c < 0:
            raise CohomologyViolationError(f"P of Gr_{format_vector(e)}({label}) has negative coefficient: {p}")


def _sum_table(ar: ARQuiver, table: dict[VertexKey, PoincareMap], vertices: list[ARVertex], limit: DimVector) -> tuple[PoincareMap, DimVector]:
    """Fold summands listed in AR order; Ext^1(earlier, later) = 0, so the earlier part is N2."""
    acc: PoincareMap = {(0,) * ar.n: _ONE}
    acc_dim: DimVector = (0,) * ar.n
    for v in vertices:
        acc = direct_sum_poincare(ar, table[v.key], v.dim, acc, acc_dim, limit=limit, dual=True)
        acc_dim = tuple(a + b for a, b in zip(acc_dim, v.dim))
    return acc, acc_dim


def _build_poincare_table(ar: ARQuiver) -> PoincareTable:
    ft = f_table(ar)
    table: dict[VertexKey, PoincareMap] = {}
    for v in ar.vertices:
        if v.is_projective:
            table[v.key] = {e: _ONE for e, _ in ft.of(v).items}
            continue
        mesh = ar.mesh_ending_at(v)
        tail = mesh.tail
        middle_table, _ = _sum_table(ar, table, list(mesh.middle), v.dim)
        tail_table = table[tail.key]
        own: PoincareMap = {}
        for e in box(v.dim):
            if not any(e) or e == v.dim:
                own[e] = _ONE
                continue
            rest = middle_table.get(e, _ZERO)
            for f in box(e):
                if f == e:
                    continue
                pf = own.get(f, _ZERO)
                g = sub(e, f)
                if pf.is_zero() or not leq(g, tail.dim):
                    continue
                pg = tail_table.get(g, _ZERO)
                if pg.is_zero():
                    continue
                rest = rest - (pf * pg).shift(2 * _euler(ar, f, sub(tail.dim, g)))
            p = rest.shift(-2 * _euler(ar, e, tail.dim))
            _check_poincare(v.label, e, p)
            if not p.is_zero():
                own[e] = p
        table[v.key] = own
    logger.debug("Poincare table for %s built", ar.quiver.type_label)
    return PoincareTable(polys=table)


def poincare_table(ar: ARQuiver) -> PoincareTable:
    return ar.cached("poincare", lambda: _build_poincare_table(ar))


def _is_point_case(ar: ARQuiver, m: ModuleExpr, e: DimVector) -> ARVertex | None:
    """The head M when m = M + tau M and e = dim M."""
    if len(m.summands) != 2 or any(mult != 1 for _, mult in m.summands):
        return None
    for head, _ in m.summands:
        mesh = ar.mesh_ending_at(head)
        if mesh is not None and any(v.key == mesh.tail.key for v, _ in m.summands) and head.dim == e:
            return head
    return None


def point_grassmannian(ar: ARQuiver, ft: FTable, head: ARVertex) -> OneVarPolynomial:
    """Gr_{dim M}(M + tau M) is a reduced point while Gr_{dim M}(E) is empty."""
    mesh = ar.mesh_ending_at(head)
    if mesh is None:
        raise ProjectiveVertexError(f"{head.label} is projective")
    product_coefficient = (ft.of(head) * ft.of(mesh.tail)).coefficient(head.dim)
    middle = ft.polynomial(ModuleExpr.of(ar.n, mesh.middle)).coefficient(head.dim)
    if product_coefficient != 1 or middle != 0:
        raise InconsistentTableError(
            f"Gr_dim M for {head.label}: chi(M + tau M) = {product_coefficient}, chi(E) = {middle}"
        )
    return _ONE


def poincare(ar: ARQuiver, ft: FTable, m, e: DimVector) -> OneVarPolynomial:
    """P_{Gr_e(m)}(q); the zero polynomial when Gr_e(m) is empty."""
    m = as_module(ar, m)
    e = check_length(e, ar.n, "e")
    if not (is_nonnegative(e) and leq(e, m.dim)):
        raise DimensionMismatchError(f"need 0 <= e <= dim m, got e={format_vector(e)}, dim m={format_vector(m.dim)}")
    if not any(e) or e == m.dim:
        return _ONE
    table = poincare_table(ar)
    if m.is_indecomposable():
        return table.get(m.summands[0][0], e)

    head = _is_point_case(ar, m, e)
    if head is not None:
        return point_grassmannian(ar, ft, head)
    if not is_rigid(ar, m) and not _is_mesh_pair(ar, m):
        logger.warning("%s is not rigid; summing in AR order", m.describe())
    result, _ = _sum_table(ar, table.polys, m.expanded(), e)
    p = result.get(e, _ZERO)
    _check_poincare(m.describe(), e, p)
    return p


def _is_mesh_pair(ar: ARQuiver, m: ModuleExpr) -> bool:
    if len(m.summands) != 2 or any(mult != 1 for _, mult in m.summands):
        return False
    (a, _), (b, _) = m.summands
    for head, other in ((a, b), (b, a)):
        mesh = ar.mesh_ending_at(head)
        if mesh is not None and mesh.tail.key == other.key:
            return True
    return False


def mesh_pair(ar: ARQuiver, head: ARVertex) -> ModuleExpr:
    """M + tau M for a non-projective M."""
    mesh = ar.mesh_ending_at(head)
    if mesh is None:
        raise ProjectiveVertexError(f"{head.label} is projective")
    return ModuleExpr.of(ar.n, [head, mesh.tail])


def betti_numbers(p: OneVarPolynomial) -> list[int]:
    """dim H^0, dim H^2, ... read off an even Poincare polynomial."""
    if any(k % 2 or k < 0 for k, _ in p.items):
        raise CohomologyViolationError(f"{p} is not an even polynomial")
    return p.betti_numbers()


def check_duality(ar: ARQuiver, ar_op: ARQuiver, m, e: DimVector) -> bool:
    """chi(Gr_e(M)) == chi(Gr_{d-e}(DM)), DM living on the opposite quiver."""
    m = as_module(ar, m)
    e = check_length(e, ar.n, "e")
    if not (is_nonnegative(e) and leq(e, m.dim)):
        raise DimensionMismatchError(f"need 0 <= e <= dim m, got e={format_vector(e)}")
    dual = ModuleExpr.of(ar_op.n, [vertex_by_dim(ar_op, v.dim) for v in m.expanded()])
    left = euler_char(f_table(ar), m, e)
    right = euler_char(f_table(ar_op), dual, sub(m.dim, e))
    return left == right
