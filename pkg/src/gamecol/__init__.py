"""gamecol: exact solvers, Alice strategies, and verification audits for
the graph coloring game and the marking game family."""

from .graphs import (
    ColorPair,
    Graph,
    GraphError,
    LimitError,
    ProductVertex,
    ProperColoring,
    add_isolated,
    all_forests_up_to,
    all_graphs_up_to,
    bicolored_subgraph,
    canonical_key,
    cartesian_product,
    cocktail_party,
    complete,
    cycle,
    empty_graph,
    graph_square,
    path,
    product_coloring,
    star,
    strong_product,
    union,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .chromatic import acyclic_chromatic_number_exact, chromatic_number_exact
from .engine import (
    ALICE,
    BOB,
    BOB_SCORING,
    STANDARD,
    BudgetError,
    ColoringState,
    GameValueReport,
    MarkingState,
    SolverLimits,
    bob_number_exact,
    chi_g_exact,
    col_g_B_exact,
    col_g_exact,
    game_value_report,
    is_bob_win,
    solve_coloring_game,
    solve_marking_game,
)
from .strategies import (
    ComposedColoringStrategy,
    ForestReactiveStrategy,
    KnK2ShiftStrategy,
    ShadePalette,
    StrategyAuditError,
    composed_coloring_strategy,
    exact_marking_strategy,
    exhaustive_bob_refute,
    forest_reactive_strategy,
    knk2_shift_strategy,
    worst_marking_play,
)
from . import bounds

__version__ = "0.1.0"
