"""Sparse exact polynomials over the integers, backed by sympy's ``PolyRing``.

``IntPolynomial`` holds F-polynomials in y_1..y_n, ``LaurentPolynomial`` holds
cluster variables in x_1^{+-1}..x_n^{+-1}, ``OneVarPolynomial`` holds Poincare
polynomials in q (negative powers allowed while a recursion is in flight).

Every value is a monomial ``offset`` times a ``PolyElement`` body over ZZ whose
monomials share no common variable factor, so equal values have equal parts.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from quiver_grassmannian.errors import DimensionMismatchError, DivisionRemainderError


Exponent = tuple[int, ...]


@lru_cache(maxsize=None)
def polynomial_ring(nvars: int, var: str = "y") -> PolyRing:
    """ZZ[var1..varn] in graded lex order, shared by all values of that arity."""
    return PolyRing([f"{var}{i}" for i in range(1, nvars + 1)], ZZ, grlex)


def _collect(items: Iterable[tuple[Exponent, int]]) -> dict[Exponent, int]:
    acc: dict[Exponent, int] = {}
    for exp, coef in items:
        acc[exp] = acc.get(exp, 0) + coef
    return {exp: coef for exp, coef in acc.items() if coef}


def _split(ring: PolyRing, terms: Mapping[Exponent, int], nvars: int) -> tuple[Exponent, PolyElement]:
    """Factor signed-exponent terms as x^offset * body with body content-free."""
    if not terms:
        return (0,) * nvars, ring.zero
    low = tuple(min(col) for col in zip(*terms))
    body = ring.from_dict({tuple(a - b for a, b in zip(exp, low)): coef for exp, coef in terms.items()})
    return low, body


def _normalize(offset: Exponent, body: PolyElement) -> tuple[Exponent, PolyElement]:
    if not body:
        return (0,) * len(offset), body
    low = tuple(min(col) for col in zip(*body.monoms()))
    if not any(low):
        return offset, body
    body = body.ring.from_dict({tuple(a - b for a, b in zip(m, low)): c for m, c in body.items()})
    return tuple(a + b for a, b in zip(offset, low)), body


@dataclass(frozen=True, eq=False)
class LaurentPolynomial:
    """x^offset * body, with body a content-free polynomial over ZZ."""

    nvars: int
    offset: Exponent
    body: PolyElement

    def __post_init__(self):
        offset, body = _normalize(tuple(self.offset), self.body)
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "body", body)
        self._validate()

    def _validate(self) -> None:
        pass

    @classmethod
    def from_terms(cls, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]]):
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        collected = _collect((tuple(int(x) for x in e), int(c)) for e, c in pairs)
        for exp in collected:
            if len(exp) != nvars:
                raise DimensionMismatchError(f"exponent {exp} has {len(exp)} entries, expected {nvars}")
        offset, body = _split(polynomial_ring(nvars), collected, nvars)
        return cls(nvars, offset, body)

    @classmethod
    def zero(cls, nvars: int):
        return cls(nvars, (0,) * nvars, polynomial_ring(nvars).zero)

    @classmethod
    def one(cls, nvars: int):
        return cls(nvars, (0,) * nvars, polynomial_ring(nvars).one)

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1):
        return cls.from_terms(len(exp), [(tuple(exp), coef)])

    @classmethod
    def variable(cls, nvars: int, i: int):
        """The i-th variable, 1-based."""
        return cls.monomial(tuple(1 if k == i - 1 else 0 for k in range(nvars)))

    @cached_property
    def items(self) -> tuple[tuple[Exponent, int], ...]:
        """Terms sorted lexicographically by exponent."""
        return tuple(
            sorted((tuple(a + b for a, b in zip(m, self.offset)), int(c)) for m, c in self.body.items())
        )

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self.items)

    def is_zero(self) -> bool:
        return not self.body

    def coefficient(self, exp: Sequence[int]) -> int:
        monom = tuple(a - b for a, b in zip(exp, self.offset))
        if any(k < 0 for k in monom):
            return 0
        return int(self.body.get(monom, 0))

    def constant_term(self) -> int:
        return self.coefficient((0,) * self.nvars)

    def coefficients(self) -> list[int]:
        return [c for _, c in self.items]

    def _check(self, other: "LaurentPolynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")

    def _result_type(self, other: "LaurentPolynomial") -> type:
        return type(self) if type(self) is type(other) else LaurentPolynomial

    def __eq__(self, other) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return (self.nvars, self.offset) == (other.nvars, other.offset) and self.body == other.body

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.nvars, self.offset, self.body))

    def __add__(self, other):
        if isinstance(other, int):
            other = type(self).one(self.nvars) * other
        self._check(other)
        low = tuple(min(a, b) for a, b in zip(self.offset, other.offset))
        body = self.body.mul_monom(tuple(a - b for a, b in zip(self.offset, low))) + other.body.mul_monom(
            tuple(a - b for a, b in zip(other.offset, low))
        )
        return self._result_type(other)(self.nvars, low, body)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.nvars, self.offset, -self.body)

    def __sub__(self, other):
        if isinstance(other, int):
            other = type(self).one(self.nvars) * other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)(self.nvars, self.offset, self.body * other)
        self._check(other)
        offset = tuple(a + b for a, b in zip(self.offset, other.offset))
        return self._result_type(other)(self.nvars, offset, self.body * other.body)

    __rmul__ = __mul__

    def shift(self, exp: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial x^exp."""
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise DimensionMismatchError(f"shift {exp} has {len(exp)} entries, expected {self.nvars}")
        return LaurentPolynomial(self.nvars, tuple(a + b for a, b in zip(self.offset, exp)), self.body)

    def evaluate(self, point: Sequence[int]) -> int:
        """Value at an integer point; negative exponents need the point entries to be +-1."""
        value = int(self.body.evaluate(list(zip(self.body.ring.gens, point))))
        for x, k in zip(point, self.offset):
            if k < 0 and x not in (1, -1):
                raise ValueError(f"cannot evaluate x^{k} exactly at {x}")
            value *= x ** abs(k)
        return value

    def to_json(self) -> list[dict]:
        return [{"exp": list(exp), "coef": str(coef)} for exp, coef in self.items]

    @classmethod
    def from_json(cls, nvars: int, data: list[dict]):
        return cls.from_terms(nvars, [(tuple(t["exp"]), int(t["coef"])) for t in data])

    def render(self, var: str = "x") -> str:
        if not self.items:
            return "0"
        parts = []
        for exp, coef in self.items:
            factors = []
            for i, k in enumerate(exp, start=1):
                if k == 1:
                    factors.append(f"{var}{i}")
                elif k:
                    factors.append(f"{var}{i}^{k}")
            body = "*".join(factors)
            if not body:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(body)
            elif coef == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coef}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.render()


class IntPolynomial(LaurentPolynomial):
    """A LaurentPolynomial whose exponents are all non-negative."""

    def _validate(self) -> None:
        if any(k < 0 for k in self.offset):
            raise DimensionMismatchError(f"negative exponent {self.offset} in a polynomial")

    def __str__(self) -> str:
        return self.render("y")


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.nvars != b.nvars:
        raise DimensionMismatchError(f"arity mismatch: {a.nvars} vs {b.nvars} variables")
    return a * b


def exact_divide(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Return r with r * den == num.

    The divisor must be a monomial times a polynomial with constant term 1;
    for two ``IntPolynomial`` values the monomial must be 1, so F-polynomials
    divide into an ``IntPolynomial``. Monomials are units, so only the bodies
    are divided.
    """
    num._check(den)
    result_type = num._result_type(den)
    if den.body.get(den.body.ring.zero_monom, 0) != 1 or (result_type is IntPolynomial and any(den.offset)):
        raise DivisionRemainderError(f"divisor {den} does not have constant term 1")
    try:
        quotient = num.body.exquo(den.body)
    except ExactQuotientFailed:
        monom, coef = num.body.rem(den.body).LT
        term = (tuple(a + b for a, b in zip(monom, num.offset)), int(coef))
        raise DivisionRemainderError(
            f"({num}) / ({den}) leaves remainder term {term[1]}*y^{term[0]}", term=term
        ) from None
    offset = tuple(a - b for a, b in zip(num.offset, den.offset))
    return result_type(num.nvars, offset, quotient)


def laurent_eval_substitute(
    f: IntPolynomial,
    monomials: Sequence[Sequence[int]],
    shift: Sequence[int],
) -> LaurentPolynomial:
    """Substitute y_i -> x^{monomials[i]} in f and multiply by x^shift."""
    if len(monomials) != f.nvars:
        raise DimensionMismatchError(f"{len(monomials)} substitutions for {f.nvars} variables")
    shift = tuple(shift)
    for m in monomials:
        if len(m) != len(shift):
            raise DimensionMismatchError(f"substitution {tuple(m)} does not match shift {shift}")
    images = []
    for exp, coef in f.items:
        target = list(shift)
        for k, m in zip(exp, monomials):
            if k:
                for j, x in enumerate(m):
                    target[j] += k * x
        images.append((tuple(target), coef))
    return LaurentPolynomial.from_terms(len(shift), images)


@dataclass(frozen=True, eq=False)
class OneVarPolynomial:
    """q^offset * body in ZZ[q]; negative exponents allowed."""

    offset: int
    body: PolyElement

    def __post_init__(self):
        (offset,), body = _normalize((int(self.offset),), self.body)
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "body", body)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "OneVarPolynomial":
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        collected = _collect(((int(k),), int(c)) for k, c in pairs)
        (offset,), body = _split(polynomial_ring(1, "q"), collected, 1)
        return cls(offset, body)

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[int]) -> "OneVarPolynomial":
        """From ``[c0, c1, ...]``, lowest power first."""
        return cls.from_terms(enumerate(coefficients))

    @classmethod
    def zero(cls) -> "OneVarPolynomial":
        return cls(0, polynomial_ring(1, "q").zero)

    @classmethod
    def one(cls) -> "OneVarPolynomial":
        return cls(0, polynomial_ring(1, "q").one)

    @classmethod
    def monomial(cls, k: int, coef: int = 1) -> "OneVarPolynomial":
        return cls.from_terms([(k, coef)])

    @cached_property
    def items(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((k + self.offset, int(c)) for (k,), c in self.body.items()))

    @property
    def terms(self) -> dict[int, int]:
        return dict(self.items)

    def is_zero(self) -> bool:
        return not self.body

    def coefficient(self, k: int) -> int:
        return int(self.body.get((k - self.offset,), 0)) if k >= self.offset else 0

    def degree(self) -> int:
        if not self.body:
            raise ValueError("zero polynomial has no degree")
        return self.offset + self.body.degree()

    def is_polynomial(self) -> bool:
        return self.offset >= 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, OneVarPolynomial):
            return NotImplemented
        return self.offset == other.offset and self.body == other.body

    def __hash__(self) -> int:
        return hash((self.offset, self.body))

    def __add__(self, other: "OneVarPolynomial") -> "OneVarPolynomial":
        if isinstance(other, int):
            other = OneVarPolynomial.monomial(0, other)
        low = min(self.offset, other.offset)
        body = self.body.mul_monom((self.offset - low,)) + other.body.mul_monom((other.offset - low,))
        return OneVarPolynomial(low, body)

    __radd__ = __add__

    def __neg__(self) -> "OneVarPolynomial":
        return OneVarPolynomial(self.offset, -self.body)

    def __sub__(self, other: "OneVarPolynomial") -> "OneVarPolynomial":
        if isinstance(other, int):
            other = OneVarPolynomial.monomial(0, other)
        return self + (-other)

    def __mul__(self, other) -> "OneVarPolynomial":
        if isinstance(other, int):
            return OneVarPolynomial(self.offset, self.body * other)
        return OneVarPolynomial(self.offset + other.offset, self.body * other.body)

    __rmul__ = __mul__

    def shift(self, k: int) -> "OneVarPolynomial":
        """Multiply by q^k."""
        if not k:
            return self
        return OneVarPolynomial(self.offset + k, self.body)

    def evaluate(self, q: int) -> int:
        if q in (1, -1):
            return sum(c * q ** abs(k) for k, c in self.items)
        if not self.is_polynomial():
            raise ValueError("cannot evaluate negative powers exactly")
        return int(self.body.evaluate(self.body.ring.gens[0], q)) * q**self.offset

    def mirror(self, top: int) -> "OneVarPolynomial":
        """q^top * P(1/q)."""
        return OneVarPolynomial.from_terms((top - k, c) for k, c in self.items)

    def halve_exponents(self) -> "OneVarPolynomial":
        """Substitute q^2 -> t; requires even exponents."""
        if any(k % 2 for k, _ in self.items):
            raise ValueError(f"{self.render()} has odd exponents")
        return OneVarPolynomial.from_terms((k // 2, c) for k, c in self.items)

    def betti_numbers(self) -> list[int]:
        """Coefficients of q^0, q^2, q^4, ... up to the degree."""
        if not self.body:
            return []
        return [self.coefficient(2 * i) for i in range(self.degree() // 2 + 1)]

    def to_json(self) -> list[dict]:
        return [{"exp": k, "coef": str(c)} for k, c in self.items]

    def render(self, var: str = "q") -> str:
        """Human-readable form such as ``1 + 4*q^2 + q^4``."""
        if not self.items:
            return "0"
        parts = []
        for k, c in self.items:
            if k == 0:
                parts.append(str(c))
                continue
            power = var if k == 1 else f"{var}^{k}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.render()
