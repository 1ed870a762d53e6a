"""game-engine: solvers vs oracles, state invariants, canonical keys."""

import pytest
from hypothesis import given, settings, strategies as st

from gamecol.engine import (
    ALICE,
    BOB,
    BOB_SCORING,
    STANDARD,
    UNCOLORED,
    BudgetError,
    ColoringState,
    MarkingState,
    SolverLimits,
    bob_number_exact,
    canonical_coloring_key,
    canonical_state_key,
    chi_g_exact,
    col_g_B_exact,
    col_g_exact,
    coloring_solve_record,
    game_value_report,
    is_bob_win,
    is_legal_coloring_move,
    solve_coloring_game,
    solve_marking_game,
)
from gamecol.graphs import (
    GraphError,
    all_graphs_up_to,
    cocktail_party,
    complete,
    cycle,
    path,
    star,
)
from oracles import coloring_game_oracle, coloring_game_oracle_lazy, marking_game_oracle


# -- is_bob_win ----------------------------------------------------------------


def test_bob_win_false_when_all_colored():
    g = path(3)
    state = ColoringState(g, 2, ALICE, (0, 1, 0))
    assert not is_bob_win(state)


def test_bob_win_p3_center_blocked():
    g = path(3)
    state = ColoringState(g, 2, ALICE, (0, UNCOLORED, 1))
    assert is_bob_win(state)


def test_bob_win_false_on_k3_one_colored():
    state = ColoringState(complete(3), 2, ALICE, (0, UNCOLORED, UNCOLORED))
    assert not is_bob_win(state)


# -- state invariants ------------------------------------------------------------


def test_state_rejects_improper_assignment():
    with pytest.raises(GraphError):
        ColoringState(complete(2), 2, ALICE, (1, 1))


def test_alternation_from_first_player():
    g = path(3)
    s = ColoringState.initial(g, 2, BOB)
    assert s.to_move == BOB
    s = s.apply(0, 0)
    assert s.to_move == ALICE


def test_apply_rejects_illegal():
    s = ColoringState.initial(complete(2), 2, ALICE).apply(0, 1)
    with pytest.raises(GraphError):
        s.apply(1, 1)
    with pytest.raises(GraphError):
        s.apply(0, 0)


def test_no_legal_move_implies_bob_win():
    # exhaustive over reachable positions of small graphs
    for g in all_graphs_up_to(4):
        for s in (1, 2):
            stack = [ColoringState.initial(g, s, ALICE)]
            seen = set()
            while stack:
                state = stack.pop()
                key = state.assignment
                if key in seen:
                    continue
                seen.add(key)
                moves = state.legal_moves()
                if not moves and not state.is_complete:
                    assert is_bob_win(state)
                for v, shade in moves:
                    stack.append(state.apply(v, shade))


# -- solver vs oracle -------------------------------------------------------------


def test_solver_equals_oracle_on_paths_and_cycles():
    for g in (path(4), cycle(4), cycle(5), complete(3)):
        for s in (1, 2, 3):
            for first in (ALICE, BOB):
                assert (
                    solve_coloring_game(g, s, first).winner
                    == coloring_game_oracle(g, s, first)
                )


def test_eager_equals_lazy_convention_n4():
    for g in all_graphs_up_to(4):
        for s in (1, 2, 3):
            assert coloring_game_oracle(g, s, ALICE) == coloring_game_oracle_lazy(
                g, s, ALICE
            )


def test_known_values():
    assert solve_coloring_game(complete(3), 3).winner == ALICE
    assert solve_coloring_game(path(4), 2).winner == BOB
    assert solve_coloring_game(cycle(4), 2).winner == BOB
    assert solve_coloring_game(cycle(4), 2, BOB).winner == ALICE


def test_chi_g_values():
    for n in range(1, 6):
        assert chi_g_exact(complete(n)).value == n
    assert chi_g_exact(path(4)).value == 3
    assert chi_g_exact(cycle(4)).value == 3


def test_chi_g_records_all_winners():
    rep = chi_g_exact(path(4), record_all=True)
    assert rep.winners == {1: BOB, 2: BOB, 3: ALICE}


def test_budget_errors():
    with pytest.raises(BudgetError):
        solve_coloring_game(complete(4), 2, limits=SolverLimits(coloring_vertices=3))
    with pytest.raises(BudgetError):
        solve_marking_game(
            complete(4), STANDARD, ALICE, SolverLimits(marking_vertices=3)
        )


def test_memo_cap_degrades_without_changing_values():
    # a zero-entry memo forces plain depth-first search; results agree
    capped = SolverLimits(memo_cap=0)
    for g in (path(4), cycle(4), complete(3)):
        for s in (2, 3):
            assert (
                solve_coloring_game(g, s, ALICE, capped).winner
                == solve_coloring_game(g, s, ALICE).winner
            )


def test_chi_g_winner_profile_measured():
    """Winning with s shades is not assumed to imply winning with s+1; the
    per-s winners are measured.  At this scale no non-monotone instance
    exists; the profile is pinned so one appearing would fail loudly."""
    from gamecol.graph6 import write_graph6

    nonmono = []
    for g in all_graphs_up_to(4):
        rep = chi_g_exact(g, record_all=True)
        ss = sorted(rep.winners)
        for a, b in zip(ss, ss[1:]):
            if rep.winners[a] == ALICE and rep.winners[b] == BOB:
                nonmono.append((write_graph6(g), a, b))
    assert nonmono == []


def test_solve_record_shape():
    rec = coloring_solve_record(path(4), 2, ALICE)
    assert rec["winner"] == BOB
    assert rec["s"] == 2
    assert set(rec) == {"graph6", "s", "first", "winner", "nodes_expanded", "millis"}
    assert rec["nodes_expanded"] > 0


# -- marking games ----------------------------------------------------------------


def test_marking_small_values():
    assert col_g_exact(complete(1)) == 1
    assert bob_number_exact(complete(1)) == 1
    assert bob_number_exact(complete(2)) == 2
    assert col_g_exact(path(4)) == 3  # pinned after the full-tree oracle run


def test_marking_matches_oracle():
    for g in (path(4), cycle(4), star(3), complete(4)):
        for mode in (STANDARD, BOB_SCORING):
            for first in (ALICE, BOB):
                assert solve_marking_game(g, mode, first) == marking_game_oracle(
                    g, mode, first
                )


def test_col_g_stars():
    for n in range(1, 9):
        assert col_g_exact(star(n)) == 2


def test_forest_bob_small():
    assert bob_number_exact(path(2)) == 2  # single edge
    assert bob_number_exact(path(8)) <= 3


def test_marking_state_alternation_and_scores():
    s = MarkingState.initial(path(3), BOB_SCORING, BOB)
    s = s.apply(1)  # bob marks the center
    assert s.marked_by[1] == BOB
    assert s.to_move == ALICE
    assert s.score_if_marked(0) == 1  # one blue neighbor
    s2 = s.apply(0)
    assert s2.marked_by[0] == ALICE
    # standard scoring counts every marked neighbor
    t = MarkingState.initial(path(3), STANDARD, BOB).apply(1).apply(0)
    assert t.score_if_marked(2) == 1


# -- canonical keys -----------------------------------------------------------------


def test_canonical_key_shade_permutation_invariance():
    a = canonical_coloring_key((0, 2, UNCOLORED, 0))
    b = canonical_coloring_key((1, 0, UNCOLORED, 1))
    assert a == b


def test_canonical_key_collision_audit_p4():
    """Distinct partial assignments not related by shade permutation get
    distinct keys; permutation-related ones share a key (all P_4 states)."""
    import itertools

    g = path(4)
    states = [
        assign
        for assign in itertools.product((UNCOLORED, 0, 1, 2), repeat=4)
        if all(
            assign[u] == UNCOLORED or assign[u] != assign[v]
            for u, v in g.edges
            if assign[v] != UNCOLORED
        )
    ]

    def perm_class(assign):
        best = None
        for perm in itertools.permutations(range(3)):
            mapped = tuple(UNCOLORED if a == UNCOLORED else perm[a] for a in assign)
            if best is None or mapped < best:
                best = mapped
        return best

    by_key = {}
    for assign in states:
        by_key.setdefault(canonical_coloring_key(assign), set()).add(perm_class(assign))
    for key, classes in by_key.items():
        assert len(classes) == 1, f"key {key} covers distinct classes {classes}"


def test_canonical_key_stable_for_empty_state():
    s = ColoringState.initial(path(3), 2, ALICE)
    assert canonical_state_key(s) == (UNCOLORED, UNCOLORED, UNCOLORED)


def test_canonical_marking_keys():
    s = MarkingState.initial(path(3), STANDARD, ALICE).apply(1)
    assert canonical_state_key(s) == (0b010,)
    b = MarkingState.initial(path(3), BOB_SCORING, BOB).apply(1)
    assert canonical_state_key(b) == (0b010, 0b010)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_shade_permutation_invariance_of_winner(data):
    from test_graphs import small_graphs

    g = data.draw(small_graphs(4))
    s = data.draw(st.integers(min_value=1, max_value=3))
    perm = data.draw(st.permutations(range(s)))
    base = solve_coloring_game(g, s, ALICE).winner
    # permuting shade names of any opening move leaves the winner unchanged
    state = ColoringState.initial(g, s, ALICE)
    moves = state.legal_moves()
    if not moves:
        return
    v, shade = moves[0]
    direct = ColoringState(g, s, ALICE, state.apply(v, shade).assignment)
    permuted_assign = tuple(
        UNCOLORED if a == UNCOLORED else perm[a] for a in direct.assignment
    )
    permuted = ColoringState(g, s, ALICE, permuted_assign)
    from gamecol.engine import ColoringSolver

    sol1 = ColoringSolver(g, s, ALICE)
    sol2 = ColoringSolver(g, s, ALICE)
    assert sol1.winner_from(direct.assignment) == sol2.winner_from(permuted.assignment)
    assert base in (ALICE, BOB)


# -- chains ------------------------------------------------------------------------


def test_game_value_report_chains_on_k1():
    rep = game_value_report(complete(1))
    assert (rep.chi, rep.chi_g, rep.col_g, rep.delta_plus_1) == (1, 1, 1, 1)
    assert rep.violations() == []


def test_cocktail_party_solver_values():
    # the first-player convention under which chi_g(cocktail(n)) = n
    assert chi_g_exact(cocktail_party(2), BOB).value == 2
    assert chi_g_exact(cocktail_party(2), ALICE).value == 3
    assert chi_g_exact(cocktail_party(3), BOB).value == 3
