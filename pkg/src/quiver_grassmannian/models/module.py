"""Direct sums of indecomposables."""

from collections import Counter
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator

from quiver_grassmannian.dimvector import DimVector
from quiver_grassmannian.models.ar import ARVertex


class ModuleExpr(BaseModel):
    """A module given by its Krull-Schmidt decomposition."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Number of vertices of the quiver")
    summands: tuple[tuple[ARVertex, int], ...] = Field(
        default=(), description="Indecomposable summands with multiplicity"
    )

    @model_validator(mode="after")
    def _check_summands(self) -> "ModuleExpr":
        keys = set()
        for v, mult in self.summands:
            if mult < 1:
                raise ValueError(f"multiplicity of {v.label} must be positive, got {mult}")
            if len(v.dim) != self.n:
                raise ValueError(f"{v.label} has {len(v.dim)} entries, expected {self.n}")
            if v.key in keys:
                raise ValueError(f"{v.label} listed twice")
            keys.add(v.key)
        return self

    @classmethod
    def of(cls, n: int, vertices: Iterable[ARVertex]) -> "ModuleExpr":
        """Sum of the given vertices, repeated entries adding up."""
        vertices = list(vertices)
        counts = Counter(v.key for v in vertices)
        lookup = {v.key: v for v in vertices}
        summands = tuple((lookup[key], counts[key]) for key in sorted(counts, key=lambda k: (k[1], k[0])))
        return cls(n=n, summands=summands)

    @property
    def dim(self) -> DimVector:
        total = [0] * self.n
        for v, mult in self.summands:
            for idx, x in enumerate(v.dim):
                total[idx] += mult * x
        return tuple(total)

    def expanded(self) -> list[ARVertex]:
        """Summands listed with repetition."""
        return [v for v, mult in self.summands for _ in range(mult)]

    def is_zero(self) -> bool:
        return not self.summands

    def is_indecomposable(self) -> bool:
        return len(self.summands) == 1 and self.summands[0][1] == 1

    def describe(self) -> str:
        if not self.summands:
            return "0"
        parts = []
        for v, mult in self.summands:
            parts.append(v.label if mult == 1 else f"{v.label}^{mult}")
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {
            "dim": list(self.dim),
            "summands": [
                {"vertex": v.label, "dim": list(v.dim), "multiplicity": mult} for v, mult in self.summands
            ],
        }
