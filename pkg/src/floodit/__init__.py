"""Exact solvers, verification oracles and a hardness-instance compiler for
the free-move flood-filling game on coloured graphs and 2xN boards."""

from .board import (
    Board2xN,
    Border,
    border_leq,
    crossing_edges,
    enumerate_borders,
    incident_vertices,
    is_section,
    parse_board,
    section_vertices,
    serialize_board,
    to_graph,
)
from .dp2xn import (
    BackPtr,
    DPTable,
    TableStats,
    ZKey,
    reconstruct,
    solve,
    table_stats,
    tree_exists,
    zero_test,
)
from .engine import (
    ColouredGraph,
    Move,
    apply_move,
    colours_present,
    contract,
    is_flooded,
    mono_components,
    replay,
)
from .errors import (
    BudgetExceededError,
    CapacityError,
    EnumerationLimitError,
    FlooditError,
    InputError,
    ParseError,
    ReconstructionError,
)
from .oracle import (
    MinMovesResult,
    SearchBudget,
    TreeView,
    check_no_leaf_moves,
    check_spanning_tree_theorem,
    check_subadditivity,
    min_moves,
    spanning_trees,
)
from .reduction import (
    ReductionMeta,
    ReductionReport,
    VCInstance,
    build_board,
    cover_strategy,
    min_vertex_cover,
    parse_graph,
    verify_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "BackPtr",
    "Board2xN",
    "Border",
    "BudgetExceededError",
    "CapacityError",
    "ColouredGraph",
    "DPTable",
    "EnumerationLimitError",
    "FlooditError",
    "InputError",
    "MinMovesResult",
    "Move",
    "ParseError",
    "ReconstructionError",
    "ReductionMeta",
    "ReductionReport",
    "SearchBudget",
    "TableStats",
    "TreeView",
    "VCInstance",
    "ZKey",
    "apply_move",
    "border_leq",
    "build_board",
    "check_no_leaf_moves",
    "check_spanning_tree_theorem",
    "check_subadditivity",
    "colours_present",
    "contract",
    "cover_strategy",
    "crossing_edges",
    "enumerate_borders",
    "incident_vertices",
    "is_flooded",
    "is_section",
    "min_moves",
    "min_vertex_cover",
    "mono_components",
    "parse_board",
    "parse_graph",
    "reconstruct",
    "replay",
    "section_vertices",
    "serialize_board",
    "solve",
    "spanning_trees",
    "table_stats",
    "to_graph",
    "tree_exists",
    "verify_reduction",
    "zero_test",
]
