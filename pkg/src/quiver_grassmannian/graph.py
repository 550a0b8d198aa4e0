"""LangGraph workflow for quiver verification."""

from pathlib import Path

from langgraph.graph import StateGraph, START, END

from quiver_grassmannian.models import Quiver
from quiver_grassmannian.state import VerificationState
from quiver_grassmannian.nodes import (
    load_quiver,
    knit_ar_quiver,
    build_tables,
    check_exchange,
    check_recursions,
    summarize,
)


def build_graph() -> StateGraph:
    """Build and return the verification LangGraph workflow.

    The workflow follows this structure:
        START
          │
          ▼
     load_quiver
          │
          ▼
    knit_ar_quiver
          │
          ▼
     build_tables
          │
          ├──────────────────┐
          ▼                  ▼
    check_exchange   check_recursions
          │                  │
          └────────┬─────────┘
                   ▼
               summarize
                   │
                   ▼
                  END
    """
    graph = StateGraph(VerificationState)

    graph.add_node("load_quiver", load_quiver)
    graph.add_node("knit_ar_quiver", knit_ar_quiver)
    graph.add_node("build_tables", build_tables)
    graph.add_node("check_exchange", check_exchange)
    graph.add_node("check_recursions", check_recursions)
    graph.add_node("summarize", summarize)

    graph.add_edge(START, "load_quiver")
    graph.add_edge("load_quiver", "knit_ar_quiver")
    graph.add_edge("knit_ar_quiver", "build_tables")

    # build_tables -> parallel (check_exchange, check_recursions)
    graph.add_edge("build_tables", "check_exchange")
    graph.add_edge("build_tables", "check_recursions")

    graph.add_edge("check_exchange", "summarize")
    graph.add_edge("check_recursions", "summarize")

    graph.add_edge("summarize", END)

    return graph


def compile_graph():
    """Compile and return the runnable graph."""
    graph = build_graph()
    return graph.compile()


# Create a singleton compiled graph for reuse
_compiled_graph = None


def get_graph():
    """Get or create the compiled graph singleton."""
    global _compiled_graph
    if _compiled_graph is None:
        _compiled_graph = compile_graph()
    return _compiled_graph


def verify_quiver(source: Quiver | str | Path) -> dict:
    """Run the verification workflow.

    Args:
        source: A Quiver, a path to a quiver description file, or the
            description text itself.

    Returns:
        Dictionary with the type label, counts of checks by kind, the
        failing checks and an overall ``passed`` flag.
    """
    graph = get_graph()

    if isinstance(source, Quiver):
        initial_state = {"quiver": source}
    elif isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and Path(source).is_file()):
        initial_state = {"quiver_path": str(source)}
    else:
        initial_state = {"quiver_text": source}

    final_state = graph.invoke(initial_state)

    return final_state.get("summary", {})
