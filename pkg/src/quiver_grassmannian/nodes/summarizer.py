"""Summary node."""

from quiver_grassmannian.models import VerificationSummary
from quiver_grassmannian.state import VerificationState


def summarize(state: VerificationState) -> dict:
    """Collect every check into the final response."""
    ar = state.get("ar")
    if ar is None:
        raise ValueError("No AR-quiver available")
    checks = state.get("checks", [])
    counts: dict[str, int] = {}
    for c in checks:
        counts[c.kind] = counts.get(c.kind, 0) + 1
    summary = VerificationSummary(
        quiver=ar.quiver.type_label,
        indecomposables=len(ar.vertices),
        meshes=len(ar.meshes),
        checks_run=dict(sorted(counts.items())),
        failures=[c for c in checks if not c.passed],
        rank_one_components=state.get("rank_one_components", []),
        passed=all(c.passed for c in checks),
    )
    return {"summary": summary.model_dump()}
