"""F-polynomial, parity and duality node."""

from quiver_grassmannian.dimvector import box, format_vector
from quiver_grassmannian.grassmann import FTable, check_duality, poincare_table
from quiver_grassmannian.models import ARQuiver, RelationCheck
from quiver_grassmannian.polyring import IntPolynomial
from quiver_grassmannian.state import VerificationState


def _division_checks(ar: ARQuiver, ft: FTable) -> list[RelationCheck]:
    checks = []
    for mesh in ar.meshes:
        lhs = ft.of(mesh.head) * ft.of(mesh.tail)
        middle = IntPolynomial.one(ar.n)
        for e in mesh.middle:
            middle = middle * ft.of(e)
        residual = lhs - middle - IntPolynomial.monomial(mesh.head.dim)
        checks.append(
            RelationCheck(
                kind="f_division",
                subject=mesh.head.label,
                passed=residual.is_zero(),
                detail="" if residual.is_zero() else f"residual {residual}",
            )
        )
    return checks


def _parity_checks(ar: ARQuiver, ft: FTable) -> list[RelationCheck]:
    table = poincare_table(ar)
    checks = []
    for v in ar.vertices:
        f = ft.of(v)
        problems = []
        for e in box(v.dim):
            p = table.get(v, e)
            if any(k % 2 or k < 0 or c < 0 for k, c in p.items):
                problems.append(f"P_{format_vector(e)} = {p}")
            elif p.evaluate(1) != f.coefficient(e):
                problems.append(f"P_{format_vector(e)}(1) = {p.evaluate(1)} != chi = {f.coefficient(e)}")
        checks.append(
            RelationCheck(kind="parity", subject=v.label, passed=not problems, detail="; ".join(problems))
        )
    return checks


def _duality_checks(ar: ARQuiver, ar_op: ARQuiver) -> list[RelationCheck]:
    checks = []
    for v in ar.vertices:
        failed = [format_vector(e) for e in box(v.dim) if not check_duality(ar, ar_op, v, e)]
        detail = f"chi differs at e = {', '.join(failed)}" if failed else ""
        checks.append(RelationCheck(kind="duality", subject=v.label, passed=not failed, detail=detail))
    return checks


def check_recursions(state: VerificationState) -> dict:
    """Re-multiply every F division, sweep Poincare parity and Grassmannian duality."""
    ar, ar_op, ft = state.get("ar"), state.get("ar_op"), state.get("ftable")
    if ar is None or ar_op is None or ft is None:
        raise ValueError("Tables have not been built")
    checks = _division_checks(ar, ft) + _parity_checks(ar, ft) + _duality_checks(ar, ar_op)
    return {"checks": checks}
