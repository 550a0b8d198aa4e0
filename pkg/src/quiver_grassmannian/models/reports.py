"""Verification report models."""

from typing import Literal

from pydantic import BaseModel, Field


CheckKind = Literal["mesh", "injective", "g_vector", "g_tau", "f_division", "parity", "duality"]


class RelationCheck(BaseModel):
    """Outcome of checking one identity."""

    kind: CheckKind = Field(description="Which family of identities this belongs to")
    subject: str = Field(description="Vertex or mesh the identity is about, e.g. 'M(1;1)'")
    passed: bool = Field(description="Whether the identity holds exactly")
    detail: str = Field(default="", description="Residual or explanation when it fails")


class ExchangeReport(BaseModel):
    """All exchange-relation and g-vector checks for one quiver."""

    quiver: str = Field(description="Type label, e.g. 'D4'")
    checks: list[RelationCheck] = Field(default_factory=list)
    rank_one_components: list[int] = Field(
        default_factory=list,
        description="First vertex of every A1 component; its cluster variable is the literal 2/x_i",
    )

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    def counts(self) -> dict[str, int]:
        """Number of checks per kind."""
        totals: dict[str, int] = {}
        for c in self.checks:
            totals[c.kind] = totals.get(c.kind, 0) + 1
        return totals


class VerificationSummary(BaseModel):
    """Final output of the verify workflow."""

    quiver: str = Field(description="Type label")
    indecomposables: int = Field(description="Number of knitted vertices")
    meshes: int = Field(description="Number of almost split sequences")
    checks_run: dict[str, int] = Field(default_factory=dict, description="Checks per kind")
    failures: list[RelationCheck] = Field(default_factory=list)
    rank_one_components: list[int] = Field(default_factory=list)
    passed: bool = Field(description="True iff every check passed")
