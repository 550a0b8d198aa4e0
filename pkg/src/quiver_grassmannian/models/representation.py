"""Explicit representations over a prime field."""

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator
from sympy import isprime

from quiver_grassmannian.dimvector import DimVector
from quiver_grassmannian.models.quiver import Quiver


Matrix = tuple[tuple[int, ...], ...]


def arrow_key(s: int, t: int) -> str:
    return f"{s}->{t}"


class ExplicitRep(BaseModel):
    """A point of the representation variety: one matrix per arrow.

    ``maps["s->t"]`` has shape ``dims[t] x dims[s]`` (row-major). The integer
    entries are kept as given and read modulo ``prime`` by ``map``, so the same
    matrices can be read over another field. Arrows without an entry act as zero.
    """

    model_config = ConfigDict(frozen=True)

    quiver: Quiver = Field(description="Underlying Dynkin quiver")
    prime: int = Field(description="Characteristic of the ground field")
    dims: DimVector = Field(description="Dimension of the space at each vertex")
    maps: dict[str, Matrix] = Field(default_factory=dict, description="Arrow 's->t' to integer matrix")

    _reduced: dict[str, Matrix] = PrivateAttr(default_factory=dict)

    @field_validator("prime")
    @classmethod
    def _check_prime(cls, p: int) -> int:
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
        return p

    @model_validator(mode="before")
    @classmethod
    def _fill_and_check(cls, data):
        if not isinstance(data, dict):
            return data
        q, p, dims = data.get("quiver"), data.get("prime"), data.get("dims")
        if not isinstance(q, Quiver) or not isinstance(p, int) or dims is None:
            return data
        if len(dims) != q.n:
            raise ValueError(f"dims has {len(dims)} entries, expected {q.n}")
        maps = dict(data.get("maps") or {})
        known = {arrow_key(s, t) for s, t in q.arrows}
        for key in maps:
            if key not in known:
                raise ValueError(f"{key} is not an arrow of the quiver")
        for s, t in q.arrows:
            key = arrow_key(s, t)
            rows, cols = dims[t - 1], dims[s - 1]
            matrix = maps.get(key)
            if matrix is None:
                matrix = [[0] * cols for _ in range(rows)]
            if len(matrix) != rows or any(len(row) != cols for row in matrix):
                shape = (len(matrix), len(matrix[0]) if matrix else 0)
                raise ValueError(f"map {key} has shape {shape}, expected ({rows}, {cols})")
            maps[key] = tuple(tuple(int(x) for x in row) for row in matrix)
        return {**data, "maps": maps}

    @model_validator(mode="after")
    def _check_dims(self) -> "ExplicitRep":
        if len(self.dims) != self.quiver.n:
            raise ValueError(f"dims has {len(self.dims)} entries, expected {self.quiver.n}")
        if any(d < 0 for d in self.dims):
            raise ValueError(f"negative dimension in {self.dims}")
        return self

    def model_post_init(self, __context) -> None:
        p = self.prime
        self._reduced = {key: tuple(tuple(x % p for x in row) for row in m) for key, m in self.maps.items()}

    def map(self, s: int, t: int) -> Matrix:
        """The matrix of arrow s->t over GF(prime)."""
        return self._reduced[arrow_key(s, t)]

    def to_dict(self) -> dict:
        return {
            "quiver": {
                "type": self.quiver.type_label,
                "arrows": [arrow_key(s, t) for s, t in self.quiver.arrows],
            },
            "prime": self.prime,
            "dims": list(self.dims),
            "maps": {key: [list(row) for row in m] for key, m in sorted(self.maps.items())},
        }
