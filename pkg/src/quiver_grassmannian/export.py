"""JSON, CSV and DOT renderings shared by the CLI.

Everything is emitted in a fixed order (AR order for vertices, canonical term
order for polynomials) so identical inputs give identical bytes.
"""

import csv
import io
import json

from quiver_grassmannian.ar_quiver import tau
from quiver_grassmannian.dimvector import format_vector
from quiver_grassmannian.homalg import HomExtTable
from quiver_grassmannian.models.ar import ARQuiver
from quiver_grassmannian.models.module import ModuleExpr
from quiver_grassmannian.models.quiver import Quiver
from quiver_grassmannian.polyring import IntPolynomial, LaurentPolynomial, OneVarPolynomial
from quiver_grassmannian.quiver_core import matrices, positive_roots


def dumps(data, compact: bool = False) -> str:
    if compact:
        return json.dumps(data, separators=(",", ":")) + "\n"
    return json.dumps(data, indent=2) + "\n"


def quiver_to_dict(q: Quiver) -> dict:
    return {
        "type": q.type_label,
        "arrows": [f"{s}->{t}" for s, t in q.arrows],
        "canonical_labels": list(q.canonical_labels),
        "matrices": matrices(q).to_dict(),
    }


def roots_to_dict(q: Quiver) -> dict:
    roots = positive_roots(q)
    return {"type": q.type_label, "count": len(roots), "roots": [list(r) for r in roots]}


def ar_to_dict(ar: ARQuiver) -> dict:
    vertices = []
    for v in ar.vertices:
        t = tau(ar, v)
        vertices.append(
            {
                "label": v.label,
                "orbit": v.orbit,
                "slice": v.slice,
                "dim": list(v.dim),
                "projective": v.is_projective,
                "injective": v.is_injective,
                "tau": t.label if t is not None else None,
            }
        )
    meshes = [
        {"tail": m.tail.label, "middle": [e.label for e in m.middle], "head": m.head.label} for m in ar.meshes
    ]
    arrows = [[f"M({a[0]};{a[1]})", f"M({b[0]};{b[1]})"] for a, b in ar.arrows]
    return {"quiver": ar.quiver.type_label, "vertices": vertices, "meshes": meshes, "arrows": arrows}


def _node(key: tuple[int, int]) -> str:
    return f"m_{key[0]}_{key[1]}"


def ar_to_dot(ar: ARQuiver) -> str:
    """Graphviz source: irreducible maps solid, tau dashed from M to tau M."""
    lines = ["digraph AR {", "    rankdir=LR;", "    node [shape=box];"]
    for v in ar.vertices:
        lines.append(f'    {_node(v.key)} [label="{v.label} dim={format_vector(v.dim)}"];')
    for a, b in ar.arrows:
        lines.append(f"    {_node(a)} -> {_node(b)};")
    for m in ar.meshes:
        lines.append(f"    {_node(m.head.key)} -> {_node(m.tail.key)} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def homext_to_dict(table: HomExtTable) -> dict:
    return {
        "labels": list(table.labels),
        "dims": [list(d) for d in table.dims],
        "hom": [list(row) for row in table.hom],
        "ext": [list(row) for row in table.ext],
    }


def homext_to_csv(table: HomExtTable) -> str:
    """One row per ordered pair: X, Y, [X,Y], [X,Y]^1."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["X", "Y", "hom", "ext"])
    for a, x in enumerate(table.labels):
        for b, y in enumerate(table.labels):
            writer.writerow([x, y, table.hom[a][b], table.ext[a][b]])
    return buffer.getvalue()


def module_to_dict(m: ModuleExpr) -> dict:
    return {"module": m.describe(), **m.to_dict()}


def fpoly_to_dict(m: ModuleExpr, f: IntPolynomial) -> dict:
    return {**module_to_dict(m), "terms": f.to_json(), "text": str(f)}


def poincare_to_dict(m: ModuleExpr, e, p: OneVarPolynomial) -> dict:
    return {
        **module_to_dict(m),
        "e": list(e),
        "empty": p.is_zero(),
        "terms": p.to_json(),
        "betti": p.betti_numbers(),
        "text": p.render(),
    }


def cc_entry(label: str, dim, g, poly: LaurentPolynomial) -> dict:
    return {
        "vertex": label,
        "dim": list(dim) if dim is not None else None,
        "g_vector": list(g) if g is not None else None,
        "cc_terms": poly.to_json(),
        "text": poly.render(),
    }
