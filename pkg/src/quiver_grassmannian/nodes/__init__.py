"""Graph nodes for the verification pipeline."""

from quiver_grassmannian.nodes.quiver_loader import load_quiver, knit_ar_quiver
from quiver_grassmannian.nodes.table_builder import build_tables
from quiver_grassmannian.nodes.exchange_checker import check_exchange
from quiver_grassmannian.nodes.recursion_checker import check_recursions
from quiver_grassmannian.nodes.summarizer import summarize

__all__ = [
    "load_quiver",
    "knit_ar_quiver",
    "build_tables",
    "check_exchange",
    "check_recursions",
    "summarize",
]
