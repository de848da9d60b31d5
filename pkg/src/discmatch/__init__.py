"""Exact solvers for matchings whose saturated vertices induce connected, c-disconnected or induced subgraphs."""

from .decomposition import NiceTreeDecomposition, TreeDecomposition, min_degree_decomposition, nicify, validate_decomposition
from .errors import DiscMatchError, InputError, ParseError, PreconditionError, ResourceLimitError
from .estimators import ConnectedMatching, DisconnectedMatching, InducedMatching
from .graph import Graph, Matching, connected_components, induced_subgraph, verify_matching
from .interval import CliquePath, IntervalModel, clique_path, interval_solve
from .matching import connect_matching, maximum_connected_matching, maximum_matching
from .oracle import DisconnectedOptimum, brute_force_disconnected, brute_force_induced
from .separators import enumerate_minimal_separators, xp_solve
from .solvers import solve
from .treewidth import tw_solve

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Matching",
    "connected_components",
    "induced_subgraph",
    "verify_matching",
    "maximum_matching",
    "connect_matching",
    "maximum_connected_matching",
    "DisconnectedOptimum",
    "brute_force_disconnected",
    "brute_force_induced",
    "enumerate_minimal_separators",
    "xp_solve",
    "IntervalModel",
    "CliquePath",
    "clique_path",
    "interval_solve",
    "TreeDecomposition",
    "NiceTreeDecomposition",
    "min_degree_decomposition",
    "nicify",
    "validate_decomposition",
    "tw_solve",
    "solve",
    "DisconnectedMatching",
    "ConnectedMatching",
    "InducedMatching",
    "DiscMatchError",
    "InputError",
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
]
