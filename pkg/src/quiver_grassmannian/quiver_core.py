"""Dynkin quivers, the Euler form and the derived integer matrices."""

import logging
import re
from collections.abc import Iterable, Sequence
from functools import lru_cache
from pathlib import Path

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from pydantic import ValidationError
from sympy import Matrix

from quiver_grassmannian.dimvector import (
    DimVector,
    check_length,
    check_vertex,
    is_positive,
    mat_vec,
    unit,
)
from quiver_grassmannian.errors import DiagramMismatchError, FixtureError, KnittingError
from quiver_grassmannian.models.quiver import DynkinType, Quiver, QuiverMatrices


logger = logging.getLogger(__name__)

_ARROW_PATTERN = re.compile(r"^(\d+)\s*->\s*(\d+)$")


def parse_type(kind: str | DynkinType | Sequence[DynkinType]) -> tuple[DynkinType, ...]:
    """Parse ``"D4"`` or a union such as ``"A2 + A1"``."""
    if isinstance(kind, DynkinType):
        return (kind,)
    if isinstance(kind, str):
        try:
            return tuple(DynkinType.parse(part) for part in kind.split("+"))
        except (ValueError, ValidationError) as e:
            raise DiagramMismatchError(f"bad diagram type {kind!r}: {e}") from e
    return tuple(kind)


def build_quiver(
    kind: str | DynkinType | Sequence[DynkinType],
    arrows: Iterable[tuple[int, int]],
) -> Quiver:
    """Validate an oriented edge list against a Dynkin diagram.

    The undirected edges must either be the standard diagram edge-for-edge, or be
    isomorphic to it; in the second case the isomorphism is kept as the canonical
    labelling and vertices keep the user's labels.
    """
    components = parse_type(kind)
    n = sum(c.rank for c in components)
    arrows = tuple((int(s), int(t)) for s, t in arrows)

    seen: set[frozenset[int]] = set()
    for s, t in arrows:
        for v in (s, t):
            if not 1 <= v <= n:
                raise DiagramMismatchError(
                    f"edge {s}-{t}: vertex {v} is outside 1..{n} for type {_label(components)}"
                )
        if s == t:
            raise DiagramMismatchError(f"edge {s}-{t} is a loop")
        edge = frozenset((s, t))
        if edge in seen:
            raise DiagramMismatchError(f"edge {s}-{t} appears twice")
        seen.add(edge)

    diagram: set[frozenset[int]] = set()
    offset = 0
    for c in components:
        diagram.update(frozenset(e) for e in c.diagram_edges(offset))
        offset += c.rank

    if seen == diagram:
        canonical = tuple(range(1, n + 1))
    else:
        canonical = _match_diagram(n, seen, diagram, components)

    quiver = Quiver(components=components, arrows=tuple(sorted(arrows)), canonical_labels=canonical)
    logger.debug("built quiver %s with %d arrows", quiver.type_label, len(arrows))
    return quiver


def _label(components: Sequence[DynkinType]) -> str:
    return " + ".join(c.label for c in components)


def _match_diagram(
    n: int,
    edges: set[frozenset[int]],
    diagram: set[frozenset[int]],
    components: Sequence[DynkinType],
) -> tuple[int, ...]:
    user = nx.Graph()
    user.add_nodes_from(range(1, n + 1))
    user.add_edges_from(tuple(e) for e in edges)
    standard = nx.Graph()
    standard.add_nodes_from(range(1, n + 1))
    standard.add_edges_from(tuple(e) for e in diagram)

    matcher = GraphMatcher(user, standard)
    if matcher.is_isomorphic():
        return tuple(matcher.mapping[i] for i in range(1, n + 1))

    extra = sorted(tuple(sorted(e)) for e in edges - diagram)
    missing = sorted(tuple(sorted(e)) for e in diagram - edges)
    if len(edges) != len(diagram):
        hint = f"expected {len(diagram)} edges, got {len(edges)}"
    else:
        hint = "underlying graph is not the diagram"
    if extra:
        s, t = extra[0]
        raise DiagramMismatchError(f"edge {s}-{t} does not fit type {_label(components)} ({hint})")
    s, t = missing[0]
    raise DiagramMismatchError(f"missing edge {s}-{t} of type {_label(components)} ({hint})")


def parse_quiver_text(text: str) -> Quiver:
    """Parse the line-oriented quiver description.

    Example::

        # the subspace orientation of D4
        type: D4
        arrows: 1->4, 2->4, 3->4
    """
    kind = None
    arrows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise FixtureError(f"line {lineno}: expected 'key: value', got {raw.strip()!r}")
        key = key.strip().lower()
        if key == "type":
            kind = value.strip()
        elif key == "arrows":
            for token in value.split(","):
                token = token.strip()
                if not token:
                    continue
                match = _ARROW_PATTERN.match(token)
                if not match:
                    raise FixtureError(f"line {lineno}: bad arrow {token!r}")
                arrows.append((int(match.group(1)), int(match.group(2))))
        else:
            raise FixtureError(f"line {lineno}: unknown key {key!r}")
    if kind is None:
        raise FixtureError("quiver description has no 'type:' line")
    return build_quiver(kind, arrows)


def load_quiver(path: str | Path) -> Quiver:
    return parse_quiver_text(Path(path).read_text())


def euler_form(q: Quiver, e: DimVector, d: DimVector) -> int:
    """<e,d> = sum_i e_i d_i - sum over arrows a of e_{s(a)} d_{t(a)}."""
    e = check_length(e, q.n, "e")
    d = check_length(d, q.n, "d")
    value = sum(x * y for x, y in zip(e, d))
    for s, t in q.arrows:
        value -= e[s - 1] * d[t - 1]
    return value


@lru_cache(maxsize=64)
def matrices(q: Quiver) -> QuiverMatrices:
    n = q.n
    H = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for s, t in q.arrows:
        H[s - 1][t - 1] -= 1

    graph = nx.DiGraph()
    graph.add_nodes_from(q.vertices)
    graph.add_edges_from(q.arrows)
    # A forest has at most one path between two vertices.
    C = [[0] * n for _ in range(n)]
    for j in q.vertices:
        for i in nx.descendants(graph, j) | {j}:
            C[i - 1][j - 1] = 1

    B = [[H[i][j] - H[j][i] for j in range(n)] for i in range(n)]

    h = Matrix(H)
    phi = -(h.inv() * h.T)
    if not all(x.is_integer for x in phi):
        raise KnittingError(f"Coxeter matrix of {q.type_label} is not integral")
    Phi = [[int(phi[i, j]) for j in range(n)] for i in range(n)]

    return QuiverMatrices(
        H=tuple(map(tuple, H)),
        C=tuple(map(tuple, C)),
        B=tuple(map(tuple, B)),
        Phi=tuple(map(tuple, Phi)),
    )


def reflect(q: Quiver, i: int, d: DimVector) -> DimVector:
    """Simple reflection s_i: the i-th entry becomes -d_i + sum of its neighbours."""
    check_vertex(i, q.n)
    d = check_length(d, q.n)
    value = -d[i - 1] + sum(d[k - 1] for k in q.neighbours[i])
    return d[: i - 1] + (value,) + d[i:]


def coxeter_apply(q: Quiver, d: DimVector) -> DimVector:
    """Phi * d; equals dim tau M when d = dim M for a non-projective indecomposable M."""
    return mat_vec(matrices(q).Phi, check_length(d, q.n))


def coxeter_by_reflections(q: Quiver, d: DimVector) -> DimVector:
    """c_Q^{-1}(d): reflect at the sinks, drop them, and repeat on what is left."""
    v = check_length(d, q.n)
    remaining = set(q.vertices)
    while remaining:
        sinks = sorted(i for i in remaining if not any(t in remaining for t in q.successors[i]))
        for i in sinks:
            v = reflect(q, i, v)
        remaining.difference_update(sinks)
    return v


@lru_cache(maxsize=64)
def positive_roots(q: Quiver) -> tuple[DimVector, ...]:
    """Close the simple roots under simple reflections, keeping positive vectors."""
    found = {unit(q.n, i) for i in q.vertices}
    frontier = list(found)
    while frontier:
        root = frontier.pop()
        for i in q.vertices:
            image = reflect(q, i, root)
            if is_positive(image) and image not in found:
                found.add(image)
                frontier.append(image)
    roots = tuple(sorted(found, key=lambda r: (sum(r), r)))
    logger.debug("%s has %d positive roots", q.type_label, len(roots))
    return roots


def is_root(q: Quiver, d: DimVector) -> bool:
    return tuple(d) in set(positive_roots(q))


def slice_order(q: Quiver) -> tuple[int, ...]:
    """Vertices ordered so that i -> j in Q puts j before i (a topological order of Q^op)."""
    graph = nx.DiGraph()
    graph.add_nodes_from(q.vertices)
    graph.add_edges_from((t, s) for s, t in q.arrows)
    return tuple(nx.lexicographical_topological_sort(graph))