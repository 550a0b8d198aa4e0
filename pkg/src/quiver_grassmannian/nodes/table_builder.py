"""Table construction node."""

from quiver_grassmannian.grassmann import f_table, poincare_table
from quiver_grassmannian.homalg import hom_ext_table
from quiver_grassmannian.state import VerificationState


def build_tables(state: VerificationState) -> dict:
    """Fill the Hom/Ext, F-polynomial and Poincare tables once.

    Both checking branches read these from the AR-quiver's cache, so they are
    built here before the fan-out.
    """
    ar = state.get("ar")
    if ar is None:
        raise ValueError("No AR-quiver available")
    hom_ext_table(ar)
    ft = f_table(ar)
    poincare_table(ar)
    return {"ftable": ft}
