"""Data models for quiver computations."""

from quiver_grassmannian.models.quiver import DynkinType, Quiver, QuiverMatrices
from quiver_grassmannian.models.ar import ARQuiver, ARVertex, AlmostSplitSequence
from quiver_grassmannian.models.module import ModuleExpr
from quiver_grassmannian.models.representation import ExplicitRep
from quiver_grassmannian.models.reports import ExchangeReport, RelationCheck, VerificationSummary

__all__ = [
    "DynkinType",
    "Quiver",
    "QuiverMatrices",
    "ARQuiver",
    "ARVertex",
    "AlmostSplitSequence",
    "ModuleExpr",
    "ExplicitRep",
    "ExchangeReport",
    "RelationCheck",
    "VerificationSummary",
]
