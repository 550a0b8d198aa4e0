"""Brute-force checks on explicit representations over prime fields.

Nothing here uses the AR-quiver: Hom and Ext come from the rank of the map

    Phi: (f_i)_i -> (M_a f_{s(a)} - f_{t(a)} N_a)_a

and subrepresentations are counted by walking reduced row echelon forms.
"""

import json
import logging
import random
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path

from pydantic import ValidationError
from sympy import GF, Matrix, Poly, interpolate, symbols
from sympy.polys.matrices import DomainMatrix

from quiver_grassmannian.dimvector import DimVector, check_length, format_vector, is_nonnegative, leq
from quiver_grassmannian.errors import (
    DiagramMismatchError,
    DimensionMismatchError,
    FixtureError,
    OracleBudgetError,
    QuiverError,
    VertexError,
)
from quiver_grassmannian.models.ar import ARQuiver
from quiver_grassmannian.models.module import ModuleExpr
from quiver_grassmannian.models.quiver import Quiver
from quiver_grassmannian.models.representation import ExplicitRep, arrow_key
from quiver_grassmannian.polyring import OneVarPolynomial
from quiver_grassmannian.quiver_core import build_quiver, slice_order
from quiver_grassmannian.utils.config import get_config


logger = logging.getLogger(__name__)

Basis = tuple[tuple[int, ...], ...]


def _rank(rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    if not rows or ncols == 0:
        return 0
    return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(p)).rank()


# --- constructors ---------------------------------------------------------------


def thin_module(q: Quiver, d: DimVector, prime: int) -> ExplicitRep:
    """The 0/1 dimension vector d with 1x1 identity maps along the arrows of its support."""
    d = check_length(d, q.n, "dimension vector")
    if any(x not in (0, 1) for x in d):
        raise DimensionMismatchError(f"{format_vector(d)} is not thin")
    maps = {arrow_key(s, t): [[1]] for s, t in q.arrows if d[s - 1] and d[t - 1]}
    return ExplicitRep(quiver=q, prime=prime, dims=d, maps=maps)


def interval_module(q: Quiver, a: int, b: int, prime: int = 2) -> ExplicitRep:
    """The type-A indecomposable supported on standard labels a..b."""
    if len(q.components) != 1 or q.components[0].family != "A":
        raise DiagramMismatchError(f"interval modules need a connected type A quiver, got {q.type_label}")
    if not (1 <= a <= q.n and 1 <= b <= q.n):
        raise VertexError(f"interval [{a},{b}] leaves 1..{q.n}")
    if a > b:
        raise DimensionMismatchError(f"empty interval [{a},{b}]")
    d = tuple(1 if a <= q.canonical_labels[i - 1] <= b else 0 for i in q.vertices)
    return thin_module(q, d, prime)


def direct_sum(reps: Sequence[ExplicitRep]) -> ExplicitRep:
    """Block-diagonal sum of the integer matrices; all summands must share quiver and prime."""
    if not reps:
        raise DimensionMismatchError("direct sum of nothing")
    first = reps[0]
    for r in reps[1:]:
        if r.quiver != first.quiver or r.prime != first.prime:
            raise DimensionMismatchError("summands live over different quivers or fields")
    q = first.quiver
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(q.n))
    maps = {}
    for s, t in q.arrows:
        block = [[0] * dims[s - 1] for _ in range(dims[t - 1])]
        row0 = col0 = 0
        for r in reps:
            m = r.maps[arrow_key(s, t)]
            for i, row in enumerate(m):
                for j, x in enumerate(row):
                    block[row0 + i][col0 + j] = x
            row0 += r.dims[t - 1]
            col0 += r.dims[s - 1]
        maps[arrow_key(s, t)] = block
    return ExplicitRep(quiver=q, prime=first.prime, dims=dims, maps=maps)


def explicit_module(ar: ARQuiver, m: ModuleExpr, prime: int) -> ExplicitRep:
    """Explicit model of a module whose indecomposable summands are all thin."""
    reps = []
    for v in m.expanded():
        if any(x > 1 for x in v.dim):
            raise FixtureError(f"{v.label} is not thin; supply its matrices in a representation file")
        reps.append(thin_module(ar.quiver, v.dim, prime))
    if not reps:
        return ExplicitRep(quiver=ar.quiver, prime=prime, dims=(0,) * ar.n)
    return direct_sum(reps)


def reduce_mod(rep: ExplicitRep, prime: int) -> ExplicitRep:
    """The same integer matrices read over GF(prime)."""
    return ExplicitRep(quiver=rep.quiver, prime=prime, dims=rep.dims, maps=dict(rep.maps))


def random_invertible(n: int, p: int, rng: random.Random) -> Matrix:
    while True:
        g = Matrix(n, n, [rng.randrange(p) for _ in range(n * n)])
        if n == 0 or g.det() % p:
            return g


def conjugate(rep: ExplicitRep, g: Mapping[int, Matrix]) -> ExplicitRep:
    """Transport rep along invertible g_i: M_a becomes g_t M_a g_s^{-1}."""
    p = rep.prime

    def at(i: int) -> Matrix:
        d = rep.dims[i - 1]
        gi = Matrix(g[i]) if i in g else Matrix.eye(d)
        if gi.shape != (d, d):
            raise DimensionMismatchError(f"g_{i} has shape {gi.shape}, expected ({d}, {d})")
        return gi

    inverses = {}
    for i in rep.quiver.vertices:
        gi = at(i)
        if rep.dims[i - 1] and gi.det() % p == 0:
            raise QuiverError(f"g_{i} is not invertible modulo {p}")
        inverses[i] = gi.inv_mod(p) if rep.dims[i - 1] else gi
    maps = {}
    for s, t in rep.quiver.arrows:
        m = Matrix(rep.dims[t - 1], rep.dims[s - 1], [x for row in rep.map(s, t) for x in row])
        image = (at(t) * m * inverses[s]).applyfunc(lambda x: x % p)
        maps[arrow_key(s, t)] = image.tolist()
    return ExplicitRep(quiver=rep.quiver, prime=p, dims=rep.dims, maps=maps)


# --- Hom and Ext ------------------------------------------------------------------


def _phi_matrix(n: ExplicitRep, m: ExplicitRep) -> tuple[list[list[int]], int]:
    """Matrix of Phi from Hom(dim n, dim m) to the sum over arrows, and its column count."""
    if n.quiver != m.quiver:
        raise DimensionMismatchError("representations over different quivers")
    if n.prime != m.prime:
        raise DimensionMismatchError(f"fields of characteristic {n.prime} and {m.prime}")
    q, e, d = n.quiver, n.dims, m.dims
    index: dict[tuple[int, int, int], int] = {}
    for i in q.vertices:
        for r in range(d[i - 1]):
            for c in range(e[i - 1]):
                index[(i, r, c)] = len(index)
    rows = []
    for s, t in q.arrows:
        m_a, n_a = m.map(s, t), n.map(s, t)
        for r in range(d[t - 1]):
            for c in range(e[s - 1]):
                row = [0] * len(index)
                for k in range(d[s - 1]):
                    row[index[(s, k, c)]] += m_a[r][k]
                for k in range(e[t - 1]):
                    row[index[(t, r, k)]] -= n_a[k][c]
                rows.append(row)
    return rows, len(index)


def hom_space_dim(n: ExplicitRep, m: ExplicitRep) -> int:
    """dim Hom(n, m) as the nullity of Phi."""
    rows, ncols = _phi_matrix(n, m)
    return ncols - _rank(rows, ncols, n.prime)


def ext_space_dim(n: ExplicitRep, m: ExplicitRep) -> int:
    """dim Ext^1(n, m) as the corank of Phi."""
    rows, ncols = _phi_matrix(n, m)
    return len(rows) - _rank(rows, ncols, n.prime)


# --- counting subrepresentations ----------------------------------------------------


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of GF(p)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subspaces(n: int, k: int, p: int) -> Iterator[Basis]:
    """Every k-dimensional subspace of GF(p)^n, once each, as its RREF basis."""
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(r, j) for r, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivot_set]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, j), x in zip(free, values):
                rows[r][j] = x
            yield tuple(tuple(row) for row in rows)


def _image(matrix, v: Sequence[int], p: int) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, v)) % p for row in matrix)


def count_subreps(m: ExplicitRep, e: DimVector, budget: int | None = None) -> int:
    """Number of subrepresentations of m with dimension vector e over GF(m.prime)."""
    q, p, d = m.quiver, m.prime, m.dims
    e = check_length(e, q.n, "e")
    if not (is_nonnegative(e) and leq(e, d)):
        raise DimensionMismatchError(f"need 0 <= e <= {format_vector(d)}, got {format_vector(e)}")
    budget = get_config().oracle_budget if budget is None else budget
    size = 1
    for i in q.vertices:
        size *= gaussian_binomial(d[i - 1], e[i - 1], p)
    if size > budget:
        raise OracleBudgetError(
            f"Gr_{format_vector(e)} over GF({p}) has {size} candidate tuples, budget is {budget}"
        )

    order = slice_order(q)
    candidates = {i: list(subspaces(d[i - 1], e[i - 1], p)) for i in order}

    def closed(s: int, chosen: dict[int, Basis]) -> bool:
        for t in q.successors[s]:
            if not chosen[s]:
                return True
            target = chosen[t]
            images = [_image(m.map(s, t), v, p) for v in chosen[s]]
            if _rank(list(target) + images, d[t - 1], p) != len(target):
                return False
        return True

    def walk(pos: int, chosen: dict[int, Basis]) -> int:
        if pos == len(order):
            return 1
        i = order[pos]
        total = 0
        for basis in candidates[i]:
            chosen[i] = basis
            if closed(i, chosen):
                total += walk(pos + 1, chosen)
        del chosen[i]
        return total

    count = walk(0, {})
    logger.debug("Gr_%s over GF(%d): %d of %d candidates", format_vector(e), p, count, size)
    return count


@dataclass(frozen=True)
class CountInterpolation:
    """Interpolated point count; ``polynomial`` is None when the counts are not polynomial within the bound."""

    points: tuple[tuple[int, int], ...]
    polynomial: OneVarPolynomial | None
    diagnostic: str = ""

    @property
    def ok(self) -> bool:
        return self.polynomial is not None


def interpolate_count(counts: Sequence[tuple[int, int]], degree_bound: int) -> CountInterpolation:
    """The polynomial in t of degree <= degree_bound through the (p, count) pairs."""
    points = tuple(sorted((int(p), int(c)) for p, c in counts))
    if len({p for p, _ in points}) != len(points):
        raise DimensionMismatchError(f"repeated prime in {points}")
    if len(points) < degree_bound + 1:
        raise DimensionMismatchError(f"degree {degree_bound} needs {degree_bound + 1} points, got {len(points)}")
    t = symbols("t")
    poly = Poly(interpolate(list(points), t), t)
    coefficients = list(reversed(poly.all_coeffs()))
    if not all(c.is_integer for c in coefficients):
        diagnostic = f"count not polynomial within bound: non-integer coefficients {coefficients}"
        logger.warning(diagnostic)
        return CountInterpolation(points=points, polynomial=None, diagnostic=diagnostic)
    if not poly.is_zero and poly.degree() > degree_bound:
        diagnostic = f"count not polynomial within bound: degree {poly.degree()} > {degree_bound}"
        logger.warning(diagnostic)
        return CountInterpolation(points=points, polynomial=None, diagnostic=diagnostic)
    return CountInterpolation(
        points=points, polynomial=OneVarPolynomial.from_coefficients([int(c) for c in coefficients])
    )


def count_polynomial(rep: ExplicitRep, e: DimVector, primes: Sequence[int], degree_bound: int | None = None) -> CountInterpolation:
    """Count over each prime (the matrices read modulo p) and interpolate."""
    bound = len(primes) - 1 if degree_bound is None else degree_bound
    counts = [(p, count_subreps(reduce_mod(rep, p), e)) for p in primes]
    return interpolate_count(counts, bound)


# --- fixtures -------------------------------------------------------------------


def _parse_arrow(text: str) -> tuple[int, int]:
    s, _, t = text.partition("->")
    return int(s), int(t)


def load_rep(path: str | Path) -> ExplicitRep:
    try:
        data = json.loads(Path(path).read_text())
        quiver = build_quiver(data["quiver"]["type"], [_parse_arrow(a) for a in data["quiver"]["arrows"]])
        return ExplicitRep(quiver=quiver, prime=data["prime"], dims=tuple(data["dims"]), maps=data.get("maps", {}))
    except (KeyError, TypeError, json.JSONDecodeError, ValidationError) as e:
        raise FixtureError(f"{path}: malformed representation file: {e}") from e


def dump_rep(rep: ExplicitRep, path: str | Path) -> None:
    Path(path).write_text(json.dumps(rep.to_dict(), indent=2) + "\n")


def d4_fixture(name: str) -> ExplicitRep:
    """The bundled (2,2,2,3)-dimensional representations ``E`` and ``F`` of the subspace-oriented D4."""
    if name.upper() not in ("E", "F"):
        raise FixtureError(f"unknown D4 fixture {name!r}, expected 'E' or 'F'")
    return load_rep(get_config().data_file("fixtures", f"d4_{name.upper()}.json"))
