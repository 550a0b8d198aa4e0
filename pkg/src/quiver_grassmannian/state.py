"""LangGraph state schema for quiver verification."""

from operator import add
from typing import Annotated, Any, TypedDict

from quiver_grassmannian.grassmann import FTable
from quiver_grassmannian.models import ARQuiver, Quiver, RelationCheck


def replace_value(existing: Any, new: Any) -> Any:
    """Reducer that replaces the existing value with the new one."""
    return new


class VerificationState(TypedDict, total=False):
    """State schema for the verification graph.

    This defines all the data that flows through the LangGraph workflow.
    """

    # Input - a quiver description, inline or as a path
    quiver_text: str
    quiver_path: str

    # Parsed quiver from load_quiver node
    quiver: Annotated[Quiver | None, replace_value]

    # AR-quivers of Q and Q^op from knit node
    ar: Annotated[ARQuiver | None, replace_value]
    ar_op: Annotated[ARQuiver | None, replace_value]

    # F-polynomials from build_tables node
    ftable: Annotated[FTable | None, replace_value]

    # Results of the two parallel checking nodes
    checks: Annotated[list[RelationCheck], add]
    rank_one_components: Annotated[list[int], replace_value]

    # Final structured response
    summary: Annotated[dict, replace_value]
