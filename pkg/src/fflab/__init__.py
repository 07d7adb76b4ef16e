"""fflab: exact solving, verification, bounds and gadgets for the firefighter
and hunter-and-rabbit pursuit-evasion games on undirected graphs."""

from .engine import FIREFIGHTER, HUNTER, Strategy, is_winning, run, step, verify
from .graph import (
    Graph,
    binary_tree,
    blowup2,
    complete,
    complete_bipartite,
    cycle,
    edgeless,
    is_caterpillar_forest,
    make_family,
    mask_of,
    neighborhood,
    nodes_of,
    parse_edge_list,
    parse_graph6,
    path,
    star,
    to_edge_list,
    to_graph6,
)
from .solver import (
    Decision,
    Limits,
    LimitExceeded,
    SolveResult,
    clique_module_reduce,
    ffn,
    hn,
    is_m_winning,
    is_winning_in_time,
    shortest_T,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
