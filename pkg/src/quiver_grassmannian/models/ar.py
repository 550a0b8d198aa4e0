"""Auslander-Reiten quiver data models."""

import threading
from collections.abc import Callable
from typing import Any, TypeVar

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from quiver_grassmannian.dimvector import DimVector, format_vector
from quiver_grassmannian.models.quiver import Quiver


T = TypeVar("T")

VertexKey = tuple[int, int]


class ARVertex(BaseModel):
    """The indecomposable M(i;k) = tau^{-k} P_i."""

    model_config = ConfigDict(frozen=True)

    orbit: int = Field(description="Vertex i of Q whose projective starts the tau-orbit")
    slice: int = Field(ge=0, description="Position k inside the orbit")
    dim: DimVector = Field(description="Dimension vector")
    is_projective: bool = Field(description="k == 0")
    is_injective: bool = Field(description="Last vertex of its orbit")

    @property
    def key(self) -> VertexKey:
        return (self.orbit, self.slice)

    @property
    def label(self) -> str:
        return f"M({self.orbit};{self.slice})"

    def __str__(self) -> str:
        return f"{self.label} dim={format_vector(self.dim)}"


class AlmostSplitSequence(BaseModel):
    """0 -> tail -> middle -> head -> 0."""

    model_config = ConfigDict(frozen=True)

    tail: ARVertex = Field(description="tau M")
    middle: tuple[ARVertex, ...] = Field(description="Indecomposable summands of E, with repetition")
    head: ARVertex = Field(description="M")


class ARQuiver(BaseModel):
    """All indecomposables of a Dynkin quiver with tau and meshes.

    ``vertices`` is stored in the inductive total order: slice by slice, and
    inside a slice targets of arrows of Q before their sources.
    """

    model_config = ConfigDict(frozen=True)

    quiver: Quiver = Field(description="The underlying quiver")
    vertices: tuple[ARVertex, ...] = Field(description="Indecomposables in the total order")
    meshes: tuple[AlmostSplitSequence, ...] = Field(description="One mesh per non-projective vertex")
    arrows: tuple[tuple[VertexKey, VertexKey], ...] = Field(
        default=(), description="Irreducible maps between indecomposables"
    )

    _by_key: dict[VertexKey, ARVertex] = PrivateAttr(default_factory=dict)
    _by_dim: dict[DimVector, ARVertex] = PrivateAttr(default_factory=dict)
    _position: dict[VertexKey, int] = PrivateAttr(default_factory=dict)
    _mesh_by_head: dict[VertexKey, AlmostSplitSequence] = PrivateAttr(default_factory=dict)
    _cache: dict[str, Any] = PrivateAttr(default_factory=dict)
    _lock: threading.RLock = PrivateAttr(default_factory=threading.RLock)

    def model_post_init(self, __context) -> None:
        self._by_key = {v.key: v for v in self.vertices}
        self._by_dim = {v.dim: v for v in self.vertices}
        self._position = {v.key: idx for idx, v in enumerate(self.vertices)}
        self._mesh_by_head = {m.head.key: m for m in self.meshes}

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def order(self) -> tuple[VertexKey, ...]:
        return tuple(v.key for v in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def get(self, orbit: int, slice_: int) -> ARVertex | None:
        return self._by_key.get((orbit, slice_))

    def find_dim(self, d: DimVector) -> ARVertex | None:
        return self._by_dim.get(tuple(d))

    def position(self, v: ARVertex) -> int:
        return self._position[v.key]

    def mesh_ending_at(self, v: ARVertex) -> AlmostSplitSequence | None:
        return self._mesh_by_head.get(v.key)

    def cached(self, name: str, factory: Callable[[], T]) -> T:
        """Compute a derived table once; concurrent callers wait for the first."""
        with self._lock:
            if name not in self._cache:
                self._cache[name] = factory()
            return self._cache[name]
