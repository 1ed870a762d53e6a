"""Exact minimax solvers for the coloring game and the marking games.

Winner/value conventions:
  * coloring game: Alice wins iff the whole graph gets properly shaded; Bob
    wins the moment some uncolored vertex has every shade in its
    neighborhood (detected eagerly after every move).
  * marking games: the play score is the maximum vertex score plus one;
    Alice minimizes, Bob maximizes.  "standard" scores count all marked
    neighbors, "bob-scoring" counts Bob's marks only.

States are immutable values; each solve owns its own memo table.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import Graph, GraphError
from .chromatic import chromatic_number_exact

ALICE = "alice"
BOB = "bob"
UNCOLORED = -1

STANDARD = "standard"
BOB_SCORING = "bob-scoring"


class BudgetError(RuntimeError):
    """Requested solve exceeds the configured search budget."""


def other_player(p: str) -> str:
    return BOB if p == ALICE else ALICE


@dataclass(frozen=True)
class SolverLimits:
    """Configurable search budgets; defaults keep every solve desk-scale."""

    coloring_vertices: int = 10
    coloring_shades: int = 8
    marking_vertices: int = 20
    bob_marking_vertices: int = 12
    memo_cap: int = 4_000_000


DEFAULT_LIMITS = SolverLimits()


# ---------------------------------------------------------------------------
# coloring game


@dataclass(frozen=True)
class ColoringState:
    """Position of the coloring game; assignment uses UNCOLORED (-1)."""

    graph: Graph
    shades: int
    first: str
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.assignment) != self.graph.n:
            raise GraphError("assignment length must equal vertex count")
        for a in self.assignment:
            if a != UNCOLORED and not (0 <= a < self.shades):
                raise GraphError(f"shade {a} out of range")
        for u, v in self.graph.edges:
            au, av = self.assignment[u], self.assignment[v]
            if au != UNCOLORED and au == av:
                raise GraphError(f"edge ({u},{v}) violates properness")

    @staticmethod
    def initial(graph: Graph, shades: int, first: str = ALICE) -> "ColoringState":
        return ColoringState(graph, shades, first, (UNCOLORED,) * graph.n)

    @property
    def colored_count(self) -> int:
        return sum(1 for a in self.assignment if a != UNCOLORED)

    @property
    def to_move(self) -> str:
        return self.first if self.colored_count % 2 == 0 else other_player(self.first)

    @property
    def is_complete(self) -> bool:
        return UNCOLORED not in self.assignment

    def shades_around(self, v: int) -> set[int]:
        return {
            self.assignment[w]
            for w in self.graph.adj[v]
            if self.assignment[w] != UNCOLORED
        }

    def legal_shades(self, v: int) -> list[int]:
        if self.assignment[v] != UNCOLORED:
            return []
        blocked = self.shades_around(v)
        return [s for s in range(self.shades) if s not in blocked]

    def legal_moves(self) -> list[tuple[int, int]]:
        return [
            (v, s)
            for v in range(self.graph.n)
            if self.assignment[v] == UNCOLORED
            for s in self.legal_shades(v)
        ]

    def apply(self, vertex: int, shade: int) -> "ColoringState":
        if not is_legal_coloring_move(self, vertex, shade):
            raise GraphError(f"illegal move: vertex {vertex} shade {shade}")
        assign = list(self.assignment)
        assign[vertex] = shade
        return ColoringState(self.graph, self.shades, self.first, tuple(assign))


def is_legal_coloring_move(state: ColoringState, vertex: int, shade: int) -> bool:
    """The one legality predicate; the solver, strategies and the service
    all decide through it."""
    if not (0 <= vertex < state.graph.n):
        return False
    if not (0 <= shade < state.shades):
        return False
    if state.assignment[vertex] != UNCOLORED:
        return False
    return shade not in state.shades_around(vertex)


def is_bob_win(state: ColoringState) -> bool:
    """True iff some uncolored vertex already sees every shade, so the
    coloring can never be completed."""
    full = (1 << state.shades) - 1
    assign = state.assignment
    for v in range(state.graph.n):
        if assign[v] != UNCOLORED:
            continue
        seen = 0
        for w in state.graph.adj[v]:
            a = assign[w]
            if a != UNCOLORED:
                seen |= 1 << a
        if seen == full:
            return True
    return False


def canonical_coloring_key(assignment: tuple[int, ...]) -> tuple[int, ...]:
    """Renumber shades by first occurrence; the winner is invariant under
    shade permutation, so permuted states share a memo entry."""
    mapping: dict[int, int] = {}
    out = []
    for a in assignment:
        if a == UNCOLORED:
            out.append(UNCOLORED)
        else:
            m = mapping.get(a)
            if m is None:
                m = len(mapping)
                mapping[a] = m
            out.append(m)
    return tuple(out)


def canonical_state_key(state) -> tuple:
    """Memo key for either game family (parity is implied by the content)."""
    if isinstance(state, ColoringState):
        return canonical_coloring_key(state.assignment)
    if isinstance(state, MarkingState):
        if state.mode == BOB_SCORING:
            return (state.marked_mask, state.bob_mask)
        return (state.marked_mask,)
    raise TypeError(f"no canonical key for {type(state).__name__}")


@dataclass
class SolveReport:
    winner: str
    nodes_expanded: int
    millis: float


class ColoringSolver:
    """Memoized AND/OR search; one instance per (graph, shades, first)."""

    def __init__(
        self,
        graph: Graph,
        shades: int,
        first: str = ALICE,
        limits: SolverLimits = DEFAULT_LIMITS,
    ) -> None:
        if graph.n > limits.coloring_vertices:
            raise BudgetError(
                f"coloring solver limited to n <= {limits.coloring_vertices}"
            )
        if shades > limits.coloring_shades:
            raise BudgetError(
                f"coloring solver limited to s <= {limits.coloring_shades}"
            )
        if shades < 0:
            raise GraphError("shade count must be nonnegative")
        self.graph = graph
        self.shades = shades
        self.first = first
        self._adj = [tuple(graph.adj[v]) for v in range(graph.n)]
        self._full = (1 << shades) - 1
        self._memo: dict[tuple[int, ...], bool] = {}
        self._cap = limits.memo_cap
        self.nodes_expanded = 0

    def _blocked_exists(self, assign: list[int]) -> bool:
        full = self._full
        for v in range(self.graph.n):
            if assign[v] != UNCOLORED:
                continue
            seen = 0
            for w in self._adj[v]:
                a = assign[w]
                if a != UNCOLORED:
                    seen |= 1 << a
            if seen == full:
                return True
        return False

    def _alice_wins(self, assign: list[int], colored: int) -> bool:
        self.nodes_expanded += 1
        if self._blocked_exists(assign):
            return False
        n = self.graph.n
        if colored == n:
            return True
        key = canonical_coloring_key(tuple(assign))
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        mover = self.first if colored % 2 == 0 else other_player(self.first)
        want = mover == ALICE
        result = not want
        moved = False
        for v in range(n):
            if assign[v] != UNCOLORED:
                continue
            seen = 0
            for w in self._adj[v]:
                a = assign[w]
                if a != UNCOLORED:
                    seen |= 1 << a
            for s in range(self.shades):
                if seen >> s & 1:
                    continue
                moved = True
                assign[v] = s
                sub = self._alice_wins(assign, colored + 1)
                assign[v] = UNCOLORED
                if sub == want:
                    result = want
                    break
            if result == want:
                break
        # a mover with no legal move can only occur in a blocked position
        assert moved, "no legal move implies is_bob_win, handled above"
        if len(self._memo) < self._cap:
            self._memo[key] = result
        return result

    def winner_from(self, assignment: tuple[int, ...]) -> str:
        colored = sum(1 for a in assignment if a != UNCOLORED)
        won = self._alice_wins(list(assignment), colored)
        return ALICE if won else BOB

    def winner(self) -> str:
        return self.winner_from((UNCOLORED,) * self.graph.n)


def solve_coloring_game(
    graph: Graph,
    shades: int,
    first: str = ALICE,
    limits: SolverLimits = DEFAULT_LIMITS,
) -> SolveReport:
    """Game value under optimal play, with node counts for the record."""
    start = time.perf_counter()
    solver = ColoringSolver(graph, shades, first, limits)
    winner = solver.winner()
    millis = (time.perf_counter() - start) * 1000.0
    return SolveReport(winner, solver.nodes_expanded, millis)


@dataclass
class ChiGReport:
    value: int
    winners: dict[int, str]


def chi_g_exact(
    graph: Graph,
    first: str = ALICE,
    limits: SolverLimits = DEFAULT_LIMITS,
    record_all: bool = False,
) -> ChiGReport:
    """Least shade count with which Alice wins.  Each s is solved
    independently (winning with s is not assumed to imply winning with
    s+1); record_all keeps scanning to max_degree+1 so the per-s winners
    are observable."""
    if graph.n == 0:
        return ChiGReport(0, {})
    winners: dict[int, str] = {}
    value: Optional[int] = None
    top = graph.max_degree + 1
    for s in range(1, top + 1):
        rep = solve_coloring_game(graph, s, first, limits)
        winners[s] = rep.winner
        if rep.winner == ALICE and value is None:
            value = s
            if not record_all:
                break
    assert value is not None, "Alice always wins with max_degree+1 shades"
    return ChiGReport(value, winners)


def coloring_solve_record(
    graph: Graph, shades: int, first: str, limits: SolverLimits = DEFAULT_LIMITS
) -> dict:
    """JSON-ready record of one solve."""
    from .graph6 import write_graph6

    rep = solve_coloring_game(graph, shades, first, limits)
    return {
        "graph6": write_graph6(graph),
        "s": shades,
        "first": first,
        "winner": rep.winner,
        "nodes_expanded": rep.nodes_expanded,
        "millis": round(rep.millis, 3),
    }


# ---------------------------------------------------------------------------
# marking games


@dataclass(frozen=True)
class MarkingState:
    """Position of a marking game; marked_by holds None, "alice" or "bob"."""

    graph: Graph
    mode: str
    first: str
    marked_by: tuple[Optional[str], ...]

    def __post_init__(self) -> None:
        if self.mode not in (STANDARD, BOB_SCORING):
            raise GraphError(f"unknown marking mode {self.mode!r}")
        if len(self.marked_by) != self.graph.n:
            raise GraphError("marked_by length must equal vertex count")

    @staticmethod
    def initial(graph: Graph, mode: str = STANDARD, first: str = ALICE) -> "MarkingState":
        return MarkingState(graph, mode, first, (None,) * graph.n)

    @property
    def marked_mask(self) -> int:
        m = 0
        for v, who in enumerate(self.marked_by):
            if who is not None:
                m |= 1 << v
        return m

    @property
    def bob_mask(self) -> int:
        m = 0
        for v, who in enumerate(self.marked_by):
            if who == BOB:
                m |= 1 << v
        return m

    @property
    def marked_count(self) -> int:
        return sum(1 for who in self.marked_by if who is not None)

    @property
    def to_move(self) -> str:
        return self.first if self.marked_count % 2 == 0 else other_player(self.first)

    @property
    def is_complete(self) -> bool:
        return None not in self.marked_by

    def unmarked(self) -> list[int]:
        return [v for v, who in enumerate(self.marked_by) if who is None]

    def red_set(self) -> set[int]:
        return {v for v, who in enumerate(self.marked_by) if who == ALICE}

    def blue_set(self) -> set[int]:
        return {v for v, who in enumerate(self.marked_by) if who == BOB}

    def score_if_marked(self, v: int) -> int:
        """Score v would receive if marked right now."""
        if self.mode == BOB_SCORING:
            return sum(1 for w in self.graph.adj[v] if self.marked_by[w] == BOB)
        return sum(1 for w in self.graph.adj[v] if self.marked_by[w] is not None)

    def apply(self, vertex: int) -> "MarkingState":
        if not is_legal_marking_move(self, vertex):
            raise GraphError(f"illegal mark: vertex {vertex}")
        marked = list(self.marked_by)
        marked[vertex] = self.to_move
        return MarkingState(self.graph, self.mode, self.first, tuple(marked))


def is_legal_marking_move(state: MarkingState, vertex: int) -> bool:
    return 0 <= vertex < state.graph.n and state.marked_by[vertex] is None


class MarkingSolver:
    """Minimax over marked subsets.  value(marked, bob) is the optimal value
    of the maximum over scores of vertices still to be marked; past scores
    combine with it by max, so the final play score is value(0, 0) + 1."""

    def __init__(
        self,
        graph: Graph,
        mode: str = STANDARD,
        first: str = ALICE,
        limits: SolverLimits = DEFAULT_LIMITS,
    ) -> None:
        cap = (
            limits.bob_marking_vertices if mode == BOB_SCORING
            else limits.marking_vertices
        )
        if graph.n > cap:
            raise BudgetError(f"{mode} marking solver limited to n <= {cap}")
        self.graph = graph
        self.mode = mode
        self.first = first
        self._adj = graph.adj_masks
        self._full = (1 << graph.n) - 1
        self._memo: dict = {}

    def value(self, marked: int = 0, bob: int = 0) -> int:
        """Optimal max-future-score from this position (-1 when nothing is
        left to mark)."""
        if marked == self._full:
            return -1
        key = (marked, bob) if self.mode == BOB_SCORING else marked
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        n = self.graph.n
        mover = (
            self.first
            if marked.bit_count() % 2 == 0
            else other_player(self.first)
        )
        score_mask = bob if self.mode == BOB_SCORING else marked
        best: Optional[int] = None
        for v in range(n):
            bit = 1 << v
            if marked & bit:
                continue
            sc = (self._adj[v] & score_mask).bit_count()
            child_bob = bob | bit if mover == BOB else bob
            val = self.value(marked | bit, child_bob)
            if val < sc:
                val = sc
            if best is None:
                best = val
            elif mover == ALICE:
                if val < best:
                    best = val
            else:
                if val > best:
                    best = val
        assert best is not None
        self._memo[key] = best
        return best

    def game_value(self) -> int:
        """Play score (max vertex score + 1) under optimal play."""
        if self.graph.n == 0:
            return 0
        return self.value(0, 0) + 1

    def best_move(self, state: MarkingState) -> int:
        """Optimal move for the player to move; ties break to the lowest
        vertex id for reproducibility."""
        if state.graph != self.graph or state.mode != self.mode or state.first != self.first:
            raise GraphError("state does not belong to this solver")
        marked = state.marked_mask
        bob = state.bob_mask
        mover = state.to_move
        score_mask = bob if self.mode == BOB_SCORING else marked
        best_v = -1
        best_val: Optional[int] = None
        for v in range(self.graph.n):
            bit = 1 << v
            if marked & bit:
                continue
            sc = (self._adj[v] & score_mask).bit_count()
            child_bob = bob | bit if mover == BOB else bob
            val = max(sc, self.value(marked | bit, child_bob))
            if best_val is None or (val < best_val if mover == ALICE else val > best_val):
                best_val = val
                best_v = v
        if best_v < 0:
            raise GraphError("no unmarked vertex")
        return best_v


def solve_marking_game(
    graph: Graph,
    mode: str = STANDARD,
    first: str = ALICE,
    limits: SolverLimits = DEFAULT_LIMITS,
) -> int:
    return MarkingSolver(graph, mode, first, limits).game_value()


def col_g_exact(graph: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> int:
    """Game coloring number: standard scoring, Alice first."""
    return solve_marking_game(graph, STANDARD, ALICE, limits)


def col_g_B_exact(graph: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> int:
    """Bob-first game coloring number."""
    return solve_marking_game(graph, STANDARD, BOB, limits)


def bob_number_exact(graph: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> int:
    """Bob-first game where only Bob's marks count toward scores."""
    return solve_marking_game(graph, BOB_SCORING, BOB, limits)


# ---------------------------------------------------------------------------
# combined report


@dataclass(frozen=True)
class GameValueReport:
    """Solved values of one graph, with the chain checks they must satisfy."""

    graph6: str
    chi: int
    chi_g: int
    col_g: int
    col_g_B: int
    bob: int
    delta_plus_1: int

    def violations(self) -> list[str]:
        bad = []
        if not (self.chi <= self.chi_g <= self.col_g <= self.delta_plus_1):
            bad.append(
                f"chain chi<=chi_g<=col_g<=delta+1 broken: "
                f"{self.chi},{self.chi_g},{self.col_g},{self.delta_plus_1}"
            )
        if not (self.bob <= self.col_g_B <= self.col_g + 1):
            bad.append(
                f"chain bob<=col_g_B<=col_g+1 broken: "
                f"{self.bob},{self.col_g_B},{self.col_g}"
            )
        return bad


def game_value_report(
    graph: Graph, limits: SolverLimits = DEFAULT_LIMITS
) -> GameValueReport:
    from .graph6 import write_graph6

    chi, _ = chromatic_number_exact(graph)
    return GameValueReport(
        graph6=write_graph6(graph),
        chi=chi,
        chi_g=chi_g_exact(graph, ALICE, limits).value,
        col_g=col_g_exact(graph, limits),
        col_g_B=col_g_B_exact(graph, limits),
        bob=bob_number_exact(graph, limits),
        delta_plus_1=graph.max_degree + 1,
    )
