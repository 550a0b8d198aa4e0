"""Exchange-relation node."""

from quiver_grassmannian.cluster import verify_exchange
from quiver_grassmannian.quiver_core import matrices
from quiver_grassmannian.state import VerificationState


def check_exchange(state: VerificationState) -> dict:
    """Check every mesh relation, injective relation and g-vector identity."""
    ar, ft = state.get("ar"), state.get("ftable")
    if ar is None or ft is None:
        raise ValueError("Tables have not been built")
    report = verify_exchange(ar, ft, matrices(ar.quiver))
    return {"checks": report.checks, "rank_one_components": report.rank_one_components}
