"""Exact minimum offensive alliances in signed graphs."""

__version__ = "0.1.0"

from .complete import aso_anti_balanced, aso_balanced, classify_complete, is_min_balanced_multipart
from .domino import DominoDecomposition, dp_solve, validate_domino
from .exact import (
    SolveResult,
    min_offensive_alliance_branching,
    min_offensive_alliance_bruteforce,
    min_offensive_alliance_unsigned,
    small_alliance_check,
)
from .graph import (
    SignedGraph,
    UnsignedGraph,
    build_graph,
    existence_precondition,
    is_offensive_alliance,
    is_offensive_alliance_unsigned,
    size_lower_bound,
)
from .reductions import (
    Hypergraph,
    gen_complete,
    gen_hypergraph,
    gen_random_signed,
    reduce_hitting_set,
    reduce_unsigned_oa,
    reduce_vertex_cover,
)
from .snd import build_oa_ilp, decode_solution, snd_partition, snd_upper_bounds, solve_ilp, solve_snd
