"""List homomorphism (list H-colouring) for graphs with multi-chain orderings."""

from listhom.brute_oracle import brute_force, count_homomorphisms
from listhom.chain_ordering import (
    MultiChainOrdering,
    find_ordering,
    interval_start_vertex,
    is_chain_between,
    ordering_from,
    permutation_start_vertex,
    verify_ordering,
)
from listhom.errors import (
    InternalError,
    InvalidInput,
    ListHomError,
    NotConnected,
    NotInClass,
    SizeLimitExceeded,
)
from listhom.graph_core import (
    Graph,
    bfs_layers,
    build_graph,
    complete_graph,
    connected_components,
    induced_subgraph,
    is_homomorphism,
    obeys_lists,
)
from listhom.homomorphism_solver import SolveResult, lh_solve

__all__ = [
    "Graph",
    "InternalError",
    "InvalidInput",
    "ListHomError",
    "MultiChainOrdering",
    "NotConnected",
    "NotInClass",
    "SizeLimitExceeded",
    "SolveResult",
    "bfs_layers",
    "brute_force",
    "build_graph",
    "complete_graph",
    "connected_components",
    "count_homomorphisms",
    "find_ordering",
    "induced_subgraph",
    "interval_start_vertex",
    "is_chain_between",
    "is_homomorphism",
    "lh_solve",
    "obeys_lists",
    "ordering_from",
    "permutation_start_vertex",
    "verify_ordering",
]
