"""Loader and knitting nodes."""

import logging

from quiver_grassmannian.ar_quiver import knit
from quiver_grassmannian.quiver_core import load_quiver as read_quiver_file, parse_quiver_text
from quiver_grassmannian.state import VerificationState


logger = logging.getLogger(__name__)


def load_quiver(state: VerificationState) -> dict:
    """Parse the quiver from inline text or from a file.

    This is a LangGraph node that takes the current state and returns
    updates to the state.
    """
    if state.get("quiver") is not None:
        return {"quiver": state["quiver"]}
    if state.get("quiver_text"):
        return {"quiver": parse_quiver_text(state["quiver_text"])}
    if state.get("quiver_path"):
        return {"quiver": read_quiver_file(state["quiver_path"])}
    raise ValueError("No quiver given")


def knit_ar_quiver(state: VerificationState) -> dict:
    """Knit the AR-quivers of Q and of Q^op."""
    q = state.get("quiver")
    if q is None:
        raise ValueError("No quiver available")
    ar = knit(q)
    ar_op = knit(q.opposite())
    logger.debug("knitted %s: %d indecomposables", q.type_label, len(ar))
    return {"ar": ar, "ar_op": ar_op}
