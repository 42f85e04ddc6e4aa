"""Exact tools for colouring empire maps on orientable surfaces."""

from heawood.errors import HeawoodError, SolverCapError
from heawood.graph import (
    Graph,
    Path,
    complete_bipartite,
    complete_graph,
    degree,
    hamiltonian_decomposition,
    is_simple,
)

__all__ = [
    "Graph",
    "HeawoodError",
    "Path",
    "SolverCapError",
    "complete_bipartite",
    "complete_graph",
    "degree",
    "hamiltonian_decomposition",
    "is_simple",
]

__version__ = "0.1.0"
