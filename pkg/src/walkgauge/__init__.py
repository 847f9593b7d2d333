"""Exact random-walk and resistance-distance invariants of small graphs."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Graph,
    UnicyclicDecomposition,
    build_graph,
    make_cycle,
    make_P,
    make_S,
    unicyclic_decompose,
)
