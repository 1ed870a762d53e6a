"""Deterministic Alice policies and the exhaustive adversarial refuter.

Every policy here is deterministic so that refutation by exhausting Bob's
move tree is meaningful.  Strategies expose clone(); the refuter clones at
each Bob branch point.  Policies that only read the passed-in state return
self from clone().
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .bounds import shade_budget
from .engine import (
    ALICE,
    BOB,
    BOB_SCORING,
    UNCOLORED,
    BudgetError,
    ColoringSolver,
    ColoringState,
    MarkingSolver,
    MarkingState,
    SolverLimits,
    DEFAULT_LIMITS,
    is_bob_win,
    is_legal_coloring_move,
    is_legal_marking_move,
    other_player,
)
from .graphs import (
    ColorPair,
    Graph,
    GraphError,
    ProperColoring,
    bicolored_subgraph,
    cartesian_product,
    complete,
)


class StrategyAuditError(RuntimeError):
    """A strategy broke one of its own guarantees (illegal move, violated
    bound, or an off-strategy position its invariant forbids)."""


# ---------------------------------------------------------------------------
# marking strategies


@dataclass
class ForestStrategyState:
    """View of the Bob marking game on a forest: Alice's red marks, Bob's
    blue marks, and the residual forest F' (forest minus red vertices minus
    blue-blue edges)."""

    forest: Graph
    red: set[int]
    blue: set[int]
    components: list[set[int]]

    @staticmethod
    def from_state(state: MarkingState) -> "ForestStrategyState":
        red, blue = state.red_set(), state.blue_set()
        comps = residual_components(state.graph, red, blue)
        return ForestStrategyState(state.graph, red, blue, comps)

    def overloaded_components(self) -> list[set[int]]:
        """Components of F' holding two or more blue vertices."""
        return [c for c in self.components if len(c & self.blue) >= 2]


def residual_components(forest: Graph, red: set[int], blue: set[int]) -> list[set[int]]:
    """Connected components of the residual forest F'."""
    alive = [v for v in range(forest.n) if v not in red]
    seen: set[int] = set()
    comps = []
    for s in alive:
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in forest.adj[v]:
                if w in red or w in seen:
                    continue
                if v in blue and w in blue:
                    continue
                seen.add(w)
                comp.add(w)
                stack.append(w)
        comps.append(comp)
    return comps


class ForestReactiveStrategy:
    """Alice's Bob-marking-game policy on a forest, good for score 2 per
    vertex (play value 3): keep at most one blue vertex per component of F'.

    When Bob's mark lands in a component that already held a blue vertex,
    Alice marks the internal vertex adjacent to Bob's vertex on the unique
    connecting path; otherwise she marks the lowest-id unmarked vertex.
    Reactive: a vertex reaching two blue neighbors is that internal vertex,
    so it gets marked immediately.
    """

    name = "forest-reactive"
    reactive = True
    bound_t = 3

    def __init__(self, forest: Graph) -> None:
        if not forest.is_forest():
            raise GraphError("forest strategy requires a forest")
        self.forest = forest

    def clone(self) -> "ForestReactiveStrategy":
        return self

    def respond(self, state: MarkingState, last: Optional[int]) -> int:
        unmarked = state.unmarked()
        if not unmarked:
            raise GraphError("no unmarked vertex to respond with")
        if last is None:
            return unmarked[0]
        red, blue = state.red_set(), state.blue_set()
        comp = self._component_of(last, red, blue)
        others = (comp & blue) - {last}
        if not others:
            return unmarked[0]
        assert len(others) == 1, "invariant: at most one prior blue per component"
        w = min(others)
        p = self._path(last, w, red, blue)
        assert len(p) >= 3, "blue-blue edges leave no adjacent pair connected"
        return p[1]

    def _component_of(self, v: int, red: set[int], blue: set[int]) -> set[int]:
        for comp in residual_components(self.forest, red, blue):
            if v in comp:
                return comp
        raise AssertionError("blue vertex missing from residual forest")

    def _path(self, a: int, b: int, red: set[int], blue: set[int]) -> list[int]:
        """Unique a-b path in F'."""
        parent = {a: a}
        stack = [a]
        while stack:
            v = stack.pop()
            if v == b:
                break
            for w in self.forest.adj[v]:
                if w in red or w in parent:
                    continue
                if v in blue and w in blue:
                    continue
                parent[w] = v
                stack.append(w)
        path = [b]
        while path[-1] != a:
            path.append(parent[path[-1]])
        path.reverse()
        return path


class ExactMarkingStrategy:
    """Optimal policy extracted from the marking solver; not reactive."""

    name = "exact"
    reactive = False

    def __init__(
        self,
        graph: Graph,
        mode: str = BOB_SCORING,
        first: str = BOB,
        claimed_t: Optional[int] = None,
        limits: SolverLimits = DEFAULT_LIMITS,
    ) -> None:
        self._solver = MarkingSolver(graph, mode, first, limits)
        self.graph = graph
        self.mode = mode
        self.bound_t = claimed_t if claimed_t is not None else self._solver.game_value()

    def clone(self) -> "ExactMarkingStrategy":
        # the solver memo caches position values, not game state
        return self

    def respond(self, state: MarkingState, last: Optional[int] = None) -> int:
        return self._solver.best_move(state)


class LowestUnmarkedStrategy:
    """Marks the lowest-id unmarked vertex; a baseline, not a bound."""

    name = "naive-lowest"
    reactive = False
    bound_t = None

    def __init__(self, graph: Graph) -> None:
        self.graph = graph

    def clone(self) -> "LowestUnmarkedStrategy":
        return self

    def respond(self, state: MarkingState, last: Optional[int] = None) -> int:
        return state.unmarked()[0]


def forest_reactive_strategy(forest: Graph) -> ForestReactiveStrategy:
    return ForestReactiveStrategy(forest)


def exact_marking_strategy(
    graph: Graph,
    mode: str = BOB_SCORING,
    first: str = BOB,
    limits: SolverLimits = DEFAULT_LIMITS,
) -> ExactMarkingStrategy:
    return ExactMarkingStrategy(graph, mode, first, limits=limits)


# ---------------------------------------------------------------------------
# shade palette and the composed coloring strategy


@dataclass(frozen=True)
class ShadePalette:
    """k disjoint blocks of per_color shades; shade ids are contiguous."""

    k: int
    per_color: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.per_color < 1:
            raise GraphError("palette needs k >= 1 and per_color >= 1")

    @property
    def total(self) -> int:
        return self.k * self.per_color

    def shade_of(self, color: int, index: int) -> int:
        if not (0 <= color < self.k and 0 <= index < self.per_color):
            raise GraphError("palette index out of range")
        return color * self.per_color + index

    def color_of(self, shade: int) -> int:
        if not (0 <= shade < self.total):
            raise GraphError(f"shade {shade} outside palette")
        return shade // self.per_color

    def block(self, color: int) -> range:
        return range(color * self.per_color, (color + 1) * self.per_color)


@dataclass
class VirtualGame:
    """One Bob marking game of the ledger, on a bicolored subgraph."""

    pair: ColorPair
    subgraph: Graph
    to_local: dict[int, int]
    state: MarkingState
    strategy: object


class VirtualGameLedger:
    """One Bob-marking game per color pair, plus its strategy instance."""

    def __init__(
        self,
        graph: Graph,
        coloring: ProperColoring,
        strategy_factory: Callable[[Graph, ColorPair], object],
    ) -> None:
        self.games: dict[ColorPair, VirtualGame] = {}
        for c, d in combinations(range(coloring.k), 2):
            pair = ColorPair(c, d)
            sub = bicolored_subgraph(graph, coloring, pair)
            to_local = {orig: i for i, orig in enumerate(sub.labels or ())}
            self.games[pair] = VirtualGame(
                pair,
                sub,
                to_local,
                MarkingState.initial(sub, BOB_SCORING, BOB),
                strategy_factory(sub, pair),
            )

    def clone(self) -> "VirtualGameLedger":
        dup = object.__new__(VirtualGameLedger)
        dup.games = {
            pair: VirtualGame(
                vg.pair, vg.subgraph, vg.to_local, vg.state, vg.strategy.clone()
            )
            for pair, vg in self.games.items()
        }
        return dup

    def snapshot(self) -> list[dict]:
        """JSON-ready view: per pair, the subgraph and the red/blue marks in
        original vertex ids."""
        out = []
        for pair in sorted(self.games, key=lambda p: (p.c, p.d)):
            vg = self.games[pair]
            labels = vg.subgraph.labels or ()
            out.append(
                {
                    "pair": [pair.c, pair.d],
                    "vertices": list(labels),
                    "edges": [
                        [labels[u], labels[v]] for u, v in vg.subgraph.edge_list()
                    ],
                    "red": sorted(labels[v] for v in vg.state.red_set()),
                    "blue": sorted(labels[v] for v in vg.state.blue_set()),
                }
            )
        return out


class ComposedColoringStrategy:
    """Coloring-game policy that plays one Bob marking game per color pair.

    Alice always shades a vertex with a shade of its base color.  Bob's
    off-color move at v with a shade of color c registers as a blue mark of
    v in the (c, color(v)) game; the game's reply w tells Alice which vertex
    to shade next.  Own-color Bob moves, exhausted games, and already-shaded
    reply targets all fall back to the idle move: lowest uncolored vertex,
    lowest free shade of its own block.

    Works with either player moving first.  Raises StrategyAuditError when a
    sub-strategy breaks its claimed score bound or when the blocked-shade
    count at a vertex Alice is about to shade exceeds the proof threshold.
    """

    name = "composed"

    def __init__(
        self,
        graph: Graph,
        coloring: ProperColoring,
        strategy_factory: Callable[[Graph, ColorPair], object],
        t: int,
        reactive: bool,
        total_shades: Optional[int] = None,
    ) -> None:
        k = coloring.k
        budget = shade_budget(k, t, reactive)
        total = budget if total_shades is None else total_shades
        if total % k:
            raise GraphError(
                f"total shades {total} must split evenly into {k} color blocks"
            )
        per = total // k
        if per < budget // k:
            raise GraphError(
                f"{per} shades per color is below the guaranteed {budget // k}"
            )
        self.graph = graph
        self.coloring = coloring
        self.t = t
        self.reactive = reactive
        self.palette = ShadePalette(k, per)
        self.ledger = VirtualGameLedger(graph, coloring, strategy_factory)
        for vg in self.ledger.games.values():
            strat_reactive = getattr(vg.strategy, "reactive", False)
            if strat_reactive != reactive:
                raise GraphError(
                    "sub-strategy reactivity does not match the reactive flag"
                )
        self.last_annotation: Optional[dict] = None

    def clone(self) -> "ComposedColoringStrategy":
        dup = object.__new__(ComposedColoringStrategy)
        dup.graph = self.graph
        dup.coloring = self.coloring
        dup.t = self.t
        dup.reactive = self.reactive
        dup.palette = self.palette
        dup.ledger = self.ledger.clone()
        dup.last_annotation = None
        return dup

    def respond(
        self, state: ColoringState, last: Optional[tuple[int, int]]
    ) -> tuple[int, int]:
        if state.shades != self.palette.total:
            raise GraphError(
                f"state plays {state.shades} shades, palette has {self.palette.total}"
            )
        if last is None:
            return self._idle(state, {"kind": "idle", "reason": "opening"})
        v, shade = last
        shade_color = self.palette.color_of(shade)
        own = self.coloring.color[v]
        if shade_color == own:
            return self._idle(state, {"kind": "idle", "reason": "own-color"})

        pair = ColorPair.of(shade_color, own)
        vg = self.ledger.games[pair]
        local_v = vg.to_local[v]
        self._check_score(vg, local_v, "bob")
        if vg.state.to_move != BOB:
            raise StrategyAuditError(
                f"virtual game {pair} out of turn (alternation broken)"
            )
        vg.state = vg.state.apply(local_v)
        if vg.state.is_complete:
            return self._idle(
                state,
                {"kind": "idle", "reason": "virtual-game-finished",
                 "pair": [pair.c, pair.d], "virtual_bob": v},
            )
        w_local = vg.strategy.respond(vg.state, local_v)
        if not is_legal_marking_move(vg.state, w_local):
            raise StrategyAuditError(
                f"sub-strategy for {pair} returned a marked vertex"
            )
        self._check_score(vg, w_local, "alice")
        vg.state = vg.state.apply(w_local)
        w = (vg.subgraph.labels or ())[w_local]
        note = {
            "kind": "virtual-reply",
            "pair": [pair.c, pair.d],
            "virtual_bob": v,
            "virtual_reply": w,
        }
        if state.assignment[w] != UNCOLORED:
            note["kind"] = "idle"
            note["reason"] = "reply-target-already-colored"
            return self._idle(state, note)
        move = (w, self._lowest_block_shade(state, w))
        self.last_annotation = note
        return move

    def _check_score(self, vg: VirtualGame, local_v: int, who: str) -> None:
        score = vg.state.score_if_marked(local_v)
        if score > self.t - 1:
            raise StrategyAuditError(
                f"virtual game {vg.pair} vertex scored {score} > t-1={self.t - 1} "
                f"({who} mark): sub-strategy bound violated"
            )

    def _idle(self, state: ColoringState, note: dict) -> tuple[int, int]:
        for u in range(state.graph.n):
            if state.assignment[u] == UNCOLORED:
                self.last_annotation = note
                return (u, self._lowest_block_shade(state, u))
        raise GraphError("idle move requested with no uncolored vertex")

    def _lowest_block_shade(self, state: ColoringState, u: int) -> int:
        """Lowest free shade of u's own block, with the proof-step check on
        how many block shades its neighborhood has consumed."""
        present = state.shades_around(u)
        block = self.palette.block(self.coloring.color[u])
        blocked = sum(1 for s in block if s in present)
        k, t = self.palette.k, self.t
        limit = (t - 2) * (k - 1) + 1 if self.reactive else (t - 1) * (k - 1)
        if blocked > limit:
            raise StrategyAuditError(
                f"{blocked} shades of color {self.coloring.color[u]} blocked at "
                f"vertex {u}, above the proof threshold {limit}"
            )
        for s in block:
            if s not in present:
                return s
        raise StrategyAuditError(f"no shade of its own color left for vertex {u}")

    def ledger_snapshot(self) -> dict:
        return {
            "k": self.palette.k,
            "per_color": self.palette.per_color,
            "t": self.t,
            "reactive": self.reactive,
            "base_colors": list(self.coloring.color),
            "games": self.ledger.snapshot(),
        }


# ---------------------------------------------------------------------------
# further coloring strategies


class NaiveLowestColoringStrategy:
    """Always the lowest legal (vertex, shade) pair; the standard punching
    bag for the refuter."""

    name = "naive-lowest"

    def __init__(self, graph: Graph) -> None:
        self.graph = graph

    def clone(self) -> "NaiveLowestColoringStrategy":
        return self

    def respond(self, state, last=None):
        moves = state.legal_moves()
        if not moves:
            raise GraphError("no legal move")
        return moves[0]


class ExactColoringStrategy:
    """Optimal play extracted from the solver, for whichever side is to
    move; ties break to the lowest (vertex, shade)."""

    name = "exact"

    def __init__(
        self,
        graph: Graph,
        shades: int,
        first: str = ALICE,
        limits: SolverLimits = DEFAULT_LIMITS,
    ) -> None:
        self._solver = ColoringSolver(graph, shades, first, limits)

    def clone(self) -> "ExactColoringStrategy":
        return self

    def respond(self, state: ColoringState, last=None) -> tuple[int, int]:
        mover = state.to_move
        fallback = None
        for v, s in state.legal_moves():
            if fallback is None:
                fallback = (v, s)
            child = state.apply(v, s)
            if is_bob_win(child):
                winner = BOB
            else:
                winner = self._solver.winner_from(child.assignment)
            if winner == mover:
                return (v, s)
        if fallback is None:
            raise GraphError("no legal move")
        return fallback


class KnK2ShiftStrategy:
    """Bob-first policy on K_n box K_2 (n even): answer (u_i, c) with
    (v_{i+1}, c) and (v_i, c) with (u_{i-1}, c), indices mod n, keeping the
    v-row equal to the u-row shifted down by one."""

    name = "knk2-shift"

    def __init__(self, n: int) -> None:
        if n < 2 or n % 2:
            raise GraphError("shift strategy needs an even n >= 2")
        self.n = n
        self._expected = cartesian_product(complete(n), complete(2))

    def clone(self) -> "KnK2ShiftStrategy":
        return self

    def respond(self, state: ColoringState, last) -> tuple[int, int]:
        if state.graph.n != 2 * self.n or state.graph.edges != self._expected.edges:
            raise StrategyAuditError("graph is not the expected K_n box K_2 layout")
        if last is None:
            raise StrategyAuditError("shift strategy plays second")
        x, c = last
        i, side = divmod(x, 2)
        if side == 0:
            target = 2 * ((i + 1) % self.n) + 1
        else:
            target = 2 * ((i - 1) % self.n)
        if not is_legal_coloring_move(state, target, c):
            raise StrategyAuditError(
                f"off-strategy: shift reply ({target},{c}) is illegal"
            )
        after = state.apply(target, c)
        for j in range(self.n):
            u = after.assignment[2 * j]
            v_next = after.assignment[2 * ((j + 1) % self.n) + 1]
            if u != v_next:
                raise StrategyAuditError(
                    f"shift invariant broken at column {j}: {u} vs {v_next}"
                )
        return (target, c)


class ComponentMirrorStrategy:
    """Alice-first policy for a disconnected graph: open on the designated
    single-vertex component, then always answer inside the component Bob
    just played, delegating to that component's Bob-first sub-strategy."""

    name = "component-mirror"

    def __init__(self, graph: Graph, sub_strategies: dict[int, object]) -> None:
        comps = graph.components()
        odd = [i for i, c in enumerate(comps) if len(c) % 2 == 1]
        if len(odd) != 1 or len(comps[odd[0]]) != 1:
            raise GraphError(
                "mirror strategy needs exactly one odd component, of size 1"
            )
        self.graph = graph
        self.components = comps
        self.opening_vertex = comps[odd[0]][0]
        self._locals: dict[int, Graph] = {}
        self._strategies: dict[int, object] = {}
        for i, comp in enumerate(comps):
            if i == odd[0]:
                continue
            if i not in sub_strategies:
                raise GraphError(f"missing sub-strategy for component {comp}")
            self._locals[i] = graph.induced(comp)
            self._strategies[i] = sub_strategies[i]
        self._comp_of = {
            v: i for i, comp in enumerate(comps) for v in comp
        }

    def clone(self) -> "ComponentMirrorStrategy":
        dup = object.__new__(ComponentMirrorStrategy)
        dup.graph = self.graph
        dup.components = self.components
        dup.opening_vertex = self.opening_vertex
        dup._locals = self._locals
        dup._strategies = {i: s.clone() for i, s in self._strategies.items()}
        dup._comp_of = self._comp_of
        return dup

    def respond(self, state: ColoringState, last) -> tuple[int, int]:
        if last is None:
            return (self.opening_vertex, 0)
        v, shade = last
        ci = self._comp_of[v]
        if ci not in self._locals:
            raise StrategyAuditError(
                "opponent played in the opening component after the opening"
            )
        local_graph = self._locals[ci]
        labels = local_graph.labels or ()
        to_local = {orig: i for i, orig in enumerate(labels)}
        local_state = ColoringState(
            local_graph,
            state.shades,
            BOB,
            tuple(state.assignment[orig] for orig in labels),
        )
        lv, lshade = self._strategies[ci].respond(local_state, (to_local[v], shade))
        return (labels[lv], lshade)


def composed_coloring_strategy(
    graph: Graph,
    coloring: ProperColoring,
    strategy_factory: Callable[[Graph, ColorPair], object],
    t: int,
    reactive: bool,
    total_shades: Optional[int] = None,
) -> ComposedColoringStrategy:
    return ComposedColoringStrategy(
        graph, coloring, strategy_factory, t, reactive, total_shades
    )


def coloring_strategy_from_name(
    name: str,
    graph: Graph,
    shades: int,
    first: str = ALICE,
    limits: SolverLimits = DEFAULT_LIMITS,
):
    """Build a coloring strategy from its CLI/service name.

    Names: naive-lowest, exact, composed(base=forest), composed(base=exact),
    knk2-shift, component-mirror.
    """
    from .chromatic import acyclic_chromatic_number_exact, chromatic_number_exact

    if name == "naive-lowest":
        return NaiveLowestColoringStrategy(graph)
    if name == "exact":
        return ExactColoringStrategy(graph, shades, first, limits)
    if name == "composed(base=forest)":
        _, phi = acyclic_chromatic_number_exact(graph)
        return ComposedColoringStrategy(
            graph,
            phi,
            lambda sub, pair: ForestReactiveStrategy(sub),
            t=3,
            reactive=True,
            total_shades=shades,
        )
    if name == "composed(base=exact)":
        _, phi = chromatic_number_exact(graph)
        t = 1
        for c, d in combinations(range(phi.k), 2):
            sub = bicolored_subgraph(graph, phi, ColorPair(c, d))
            if sub.n:
                t = max(t, MarkingSolver(sub, BOB_SCORING, BOB, limits).game_value())
        return ComposedColoringStrategy(
            graph,
            phi,
            lambda sub, pair: ExactMarkingStrategy(sub, limits=limits),
            t=t,
            reactive=False,
            total_shades=shades,
        )
    if name == "knk2-shift":
        if graph.n % 2:
            raise GraphError("knk2-shift needs a K_n box K_2 graph (even order)")
        return KnK2ShiftStrategy(graph.n // 2)
    if name == "component-mirror":
        subs: dict[int, object] = {}
        for i, comp in enumerate(graph.components()):
            if len(comp) % 2 == 0:
                subs[i] = ExactColoringStrategy(
                    graph.induced(comp), shades, BOB, limits
                )
        return ComponentMirrorStrategy(graph, subs)
    raise GraphError(f"unknown coloring strategy {name!r}")


MARKING_STRATEGY_NAMES = ("exact", "naive-lowest", "forest-reactive")


def marking_strategy_from_name(
    name: str,
    graph: Graph,
    mode: str = BOB_SCORING,
    first: str = BOB,
    limits: SolverLimits = DEFAULT_LIMITS,
):
    """Build a marking strategy from its CLI/service name."""
    if name == "exact":
        return ExactMarkingStrategy(graph, mode, first, limits=limits)
    if name == "naive-lowest":
        return LowestUnmarkedStrategy(graph)
    if name == "forest-reactive":
        return ForestReactiveStrategy(graph)
    raise GraphError(f"unknown marking strategy {name!r}")


def knk2_shift_strategy(n: int) -> KnK2ShiftStrategy:
    return KnK2ShiftStrategy(n)


def component_mirror_strategy(
    graph: Graph, sub_strategies: dict[int, object]
) -> ComponentMirrorStrategy:
    return ComponentMirrorStrategy(graph, sub_strategies)


# ---------------------------------------------------------------------------
# refuters


@dataclass
class RefuteOutcome:
    """Result of exhausting Bob's move tree against a fixed Alice policy."""

    status: str  # "certified" | "refuted" | "audit-failed"
    certificate: Optional[list[dict]] = None
    bob_moves_explored: int = 0
    detail: Optional[str] = None

    @property
    def certified(self) -> bool:
        return self.status == "certified"


DEFAULT_BOB_MOVE_BUDGET = 2_000_000


def exhaustive_bob_refute(
    graph: Graph,
    shades: int,
    strategy,
    first: str = ALICE,
    max_bob_moves: int = DEFAULT_BOB_MOVE_BUDGET,
) -> RefuteOutcome:
    """Search every legal Bob line with Alice fixed to `strategy`.

    Returns a certificate (the full move list ending in a Bob win) when one
    exists; "certified" means the whole tree was exhausted without one.
    A sub-strategy audit failure is its own outcome, and blowing the Bob-move
    budget raises BudgetError (that is neither refuted nor certified).
    """
    explored = 0
    moves: list[dict] = []

    def record(player: str, v: int, s: int) -> dict:
        return {"ply": len(moves), "player": player, "vertex": v, "shade": s}

    def alice_turn(state: ColoringState, strat) -> Optional[list[dict]]:
        """Apply Alice's reply; returns a certificate list on a Bob win,
        None if the game ended well, or recurses into Bob's turn."""
        mv = strat.respond(state, (moves[-1]["vertex"], moves[-1]["shade"]))
        return _after_alice(state, strat, mv)

    def _after_alice(state, strat, mv) -> Optional[list[dict]]:
        v, s = mv
        if not is_legal_coloring_move(state, v, s):
            raise StrategyAuditError(f"strategy returned illegal move ({v},{s})")
        nxt = state.apply(v, s)
        moves.append(record(ALICE, v, s))
        try:
            if is_bob_win(nxt):
                return list(moves)
            if nxt.is_complete:
                return None
            return bob_turn(nxt, strat)
        finally:
            moves.pop()

    def bob_turn(state: ColoringState, strat) -> Optional[list[dict]]:
        nonlocal explored
        legal = state.legal_moves()
        assert legal, "no legal move implies a blocked vertex, caught earlier"
        for v, s in legal:
            explored += 1
            if explored > max_bob_moves:
                raise BudgetError(
                    f"refuter exceeded {max_bob_moves} Bob moves"
                )
            nxt = state.apply(v, s)
            moves.append(record(BOB, v, s))
            try:
                if is_bob_win(nxt):
                    return list(moves)
                if not nxt.is_complete:
                    cert = alice_turn(nxt, strat.clone())
                    if cert is not None:
                        return cert
            finally:
                moves.pop()
        return None

    state = ColoringState.initial(graph, shades, first)
    try:
        if graph.n == 0:
            return RefuteOutcome("certified", bob_moves_explored=0)
        if first == ALICE:
            root = strategy.clone()
            mv = root.respond(state, None)
            cert = _after_alice(state, root, mv)
        else:
            if is_bob_win(state):
                cert = []
            else:
                cert = bob_turn(state, strategy)
    except StrategyAuditError as exc:
        return RefuteOutcome(
            "audit-failed", bob_moves_explored=explored, detail=str(exc)
        )
    if cert is not None:
        return RefuteOutcome("refuted", certificate=cert, bob_moves_explored=explored)
    return RefuteOutcome("certified", bob_moves_explored=explored)


def replay_certificate(
    graph: Graph, shades: int, first: str, certificate: list[dict]
) -> bool:
    """True iff the move list is legal under engine rules and its final
    position is a genuine Bob win."""
    state = ColoringState.initial(graph, shades, first)
    expected = first
    for rec in certificate:
        if rec["player"] != expected:
            return False
        if not is_legal_coloring_move(state, rec["vertex"], rec["shade"]):
            return False
        state = state.apply(rec["vertex"], rec["shade"])
        expected = other_player(expected)
    return is_bob_win(state)


@dataclass
class MarkingRefuteOutcome:
    worst_value: int  # worst play score (max vertex score + 1) Bob can force
    witness: list[int]  # Bob/Alice move sequence achieving it
    lines: int = 0


def worst_marking_play(
    graph: Graph,
    strategy,
    mode: str = BOB_SCORING,
    first: str = BOB,
    after_alice_check: Optional[Callable[[MarkingState], None]] = None,
) -> MarkingRefuteOutcome:
    """Exhaust Bob's marking choices against a fixed Alice policy and return
    the worst play score Bob can force.

    When the strategy carries the reactive flag, every Bob move that leaves
    an unmarked vertex with bound_t - 1 blue neighbors must be answered on
    that vertex; violations raise StrategyAuditError.  after_alice_check runs
    on the position after each Alice reply (used for the residual-forest
    invariant audit)."""
    lines = 0

    def reactive_targets(state: MarkingState) -> set[int]:
        t = strategy.bound_t
        blue = state.blue_set()
        return {
            v
            for v in state.unmarked()
            if sum(1 for w in state.graph.adj[v] if w in blue) == t - 1
        }

    def run(state: MarkingState, strat, current_max: int, trail: list[int]):
        nonlocal lines
        if state.is_complete:
            lines += 1
            return current_max, list(trail)
        if state.to_move == BOB:
            worst = -1
            worst_trail: list[int] = []
            for v in state.unmarked():
                sc = state.score_if_marked(v)
                nxt = state.apply(v)
                trail.append(v)
                got, got_trail = run(nxt, strat.clone(), max(current_max, sc), trail)
                trail.pop()
                if got > worst:
                    worst, worst_trail = got, got_trail
            return worst, worst_trail
        last = trail[-1] if trail else None
        reply = strat.respond(state, last)
        if not is_legal_marking_move(state, reply):
            raise StrategyAuditError(f"strategy returned marked vertex {reply}")
        if getattr(strat, "reactive", False) and last is not None:
            targets = reactive_targets(state)
            if targets and reply not in targets:
                raise StrategyAuditError(
                    f"reactive strategy ignored triggered vertices {sorted(targets)}"
                )
        sc = state.score_if_marked(reply)
        nxt = state.apply(reply)
        if after_alice_check is not None:
            after_alice_check(nxt)
        trail.append(reply)
        got, got_trail = run(nxt, strat, max(current_max, sc), trail)
        trail.pop()
        return got, got_trail

    if graph.n == 0:
        return MarkingRefuteOutcome(0, [], 0)
    worst, witness = run(MarkingState.initial(graph, mode, first), strategy, 0, [])
    return MarkingRefuteOutcome(worst + 1, witness, lines)
