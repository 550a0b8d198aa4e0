"""Dynkin quiver data models."""

import re
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from quiver_grassmannian.dimvector import DimVector, IntMatrix


_TYPE_PATTERN = re.compile(r"^\s*([ADEade])\s*_?\s*(\d+)\s*$")


class DynkinType(BaseModel):
    """One simply-laced Dynkin diagram, e.g. ``D4``."""

    model_config = ConfigDict(frozen=True)

    family: Literal["A", "D", "E"] = Field(description="Diagram family")
    rank: int = Field(ge=1, description="Number of vertices")

    @model_validator(mode="after")
    def _check_rank(self) -> "DynkinType":
        if self.family == "D" and self.rank < 4:
            raise ValueError(f"D_n needs n >= 4, got D{self.rank}")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError(f"E_n needs n in 6, 7, 8, got E{self.rank}")
        return self

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        match = _TYPE_PATTERN.match(text)
        if not match:
            raise ValueError(f"not a Dynkin label: {text!r}")
        return cls(family=match.group(1).upper(), rank=int(match.group(2)))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def diagram_edges(self, offset: int = 0) -> list[tuple[int, int]]:
        """Undirected edges of the diagram in the standard numbering, shifted by ``offset``."""
        n = self.rank
        if self.family == "A":
            edges = [(i, i + 1) for i in range(1, n)]
        elif self.family == "D":
            edges = [(i, i + 1) for i in range(1, n - 2)]
            edges += [(n - 2, n - 1), (n - 2, n)]
        else:
            edges = [(1, 2), (2, 4), (3, 4), (4, 5), (5, 6)]
            edges += [(i, i + 1) for i in range(6, n)]
        return [(a + offset, b + offset) for a, b in edges]


class Quiver(BaseModel):
    """An oriented (union of) simply-laced Dynkin diagram(s).

    Vertices are the labels ``1..n`` as given by the user. ``canonical_labels[i - 1]``
    is the standard diagram label of vertex ``i``; it is the identity whenever the
    arrows already follow the standard numbering.
    """

    model_config = ConfigDict(frozen=True)

    components: tuple[DynkinType, ...] = Field(description="Diagram components, in block order")
    arrows: tuple[tuple[int, int], ...] = Field(description="Arrows as (source, target) pairs")
    canonical_labels: tuple[int, ...] = Field(description="Standard label of each vertex")

    _neighbours: dict[int, tuple[int, ...]] = PrivateAttr(default_factory=dict)
    _successors: dict[int, tuple[int, ...]] = PrivateAttr(default_factory=dict)
    _predecessors: dict[int, tuple[int, ...]] = PrivateAttr(default_factory=dict)

    @property
    def n(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def type_label(self) -> str:
        return " + ".join(c.label for c in self.components)

    def model_post_init(self, __context) -> None:
        succ: dict[int, list[int]] = {i: [] for i in self.vertices}
        pred: dict[int, list[int]] = {i: [] for i in self.vertices}
        for s, t in self.arrows:
            succ[s].append(t)
            pred[t].append(s)
        self._successors = {i: tuple(sorted(v)) for i, v in succ.items()}
        self._predecessors = {i: tuple(sorted(v)) for i, v in pred.items()}
        self._neighbours = {i: tuple(sorted(succ[i] + pred[i])) for i in self.vertices}

    @property
    def neighbours(self) -> dict[int, tuple[int, ...]]:
        return self._neighbours

    @property
    def successors(self) -> dict[int, tuple[int, ...]]:
        """Targets of the arrows leaving each vertex."""
        return self._successors

    @property
    def predecessors(self) -> dict[int, tuple[int, ...]]:
        return self._predecessors

    def is_standard(self) -> bool:
        return self.canonical_labels == tuple(self.vertices)

    def component_vertices(self) -> list[tuple[DynkinType, tuple[int, ...]]]:
        """User vertices of each component; component k owns a block of standard labels."""
        blocks = []
        start = 1
        for c in self.components:
            block = range(start, start + c.rank)
            members = tuple(i for i in self.vertices if self.canonical_labels[i - 1] in block)
            blocks.append((c, members))
            start += c.rank
        return blocks

    def opposite(self) -> "Quiver":
        """The quiver with every arrow reversed."""
        return Quiver(
            components=self.components,
            arrows=tuple(sorted((t, s) for s, t in self.arrows)),
            canonical_labels=self.canonical_labels,
        )

    def describe(self) -> str:
        arrows = ", ".join(f"{s}->{t}" for s, t in self.arrows)
        return f"type: {self.type_label}\narrows: {arrows}"


class QuiverMatrices(BaseModel):
    """Integer matrices of a quiver in the basis of simple roots."""

    model_config = ConfigDict(frozen=True)

    H: IntMatrix = Field(description="Euler matrix, <e,d> = e^t H d")
    C: IntMatrix = Field(description="Cartan matrix, C[i][j] = number of paths j -> i")
    B: IntMatrix = Field(description="Exchange matrix H - H^t")
    Phi: IntMatrix = Field(description="Coxeter matrix -H^{-1} H^t")

    @model_validator(mode="after")
    def _check_identities(self) -> "QuiverMatrices":
        n = len(self.H)
        for i in range(n):
            for j in range(n):
                ctH = sum(self.C[k][i] * self.H[k][j] for k in range(n))
                if ctH != (1 if i == j else 0):
                    raise ValueError("C^t H is not the identity")
                if self.B[i][j] != -self.B[j][i]:
                    raise ValueError("B is not skew-symmetric")
                if self.B[i][j] != self.H[i][j] - self.H[j][i]:
                    raise ValueError("B differs from H - H^t")
        return self

    @property
    def n(self) -> int:
        return len(self.H)

    def projective_dim(self, j: int) -> DimVector:
        """dim P_j, the j-th column of C."""
        return tuple(row[j - 1] for row in self.C)

    def injective_dim(self, k: int) -> DimVector:
        """dim I_k, the k-th row of C."""
        return tuple(self.C[k - 1])

    def to_dict(self) -> dict:
        return {name: [list(row) for row in getattr(self, name)] for name in ("H", "C", "B", "Phi")}
