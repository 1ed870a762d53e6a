"""Exact chromatic and acyclic chromatic numbers vs brute-force oracles."""

import pytest

from gamecol.chromatic import (
    acyclic_chromatic_number_exact,
    chromatic_number_exact,
    is_acyclic_coloring,
)
from gamecol.graphs import (
    LimitError,
    all_forests_up_to,
    all_graphs_up_to,
    complete,
    cycle,
    empty_graph,
    path,
    star,
)
from oracles import acyclic_chromatic_oracle, chromatic_oracle


def test_chi_k5():
    assert chromatic_number_exact(complete(5))[0] == 5


def test_chi_c5():
    assert chromatic_number_exact(cycle(5))[0] == 3


def test_chi_petersen():
    # Petersen graph: outer C5, inner 5-cycle with chords, spokes
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    from gamecol.graphs import Graph

    petersen = Graph.from_edges(10, edges)
    k, phi = chromatic_number_exact(petersen)
    assert k == 3
    assert phi.k == 3


def test_chi_matches_oracle_on_all_small_graphs():
    for g in all_graphs_up_to(5):
        k, witness = chromatic_number_exact(g)
        assert k == chromatic_oracle(g)
        assert witness.k == k  # witness validity enforced by ProperColoring


def test_chi_limit():
    with pytest.raises(LimitError):
        chromatic_number_exact(empty_graph(20), limit=16)


def test_acyclic_forest_is_2():
    for f in all_forests_up_to(5):
        expected = 1 if f.edge_count == 0 else 2
        assert acyclic_chromatic_number_exact(f)[0] == expected


def test_acyclic_c4_is_3():
    k, phi = acyclic_chromatic_number_exact(cycle(4))
    assert k == 3
    assert is_acyclic_coloring(cycle(4), phi)


def test_acyclic_k4_is_4():
    assert acyclic_chromatic_number_exact(complete(4))[0] == 4


def test_acyclic_matches_oracle_on_all_small_graphs():
    for g in all_graphs_up_to(4):
        k, witness = acyclic_chromatic_number_exact(g)
        assert k == acyclic_chromatic_oracle(g)
        assert is_acyclic_coloring(g, witness)


def test_acyclic_c5():
    k, phi = acyclic_chromatic_number_exact(cycle(5))
    assert k == 3
    assert is_acyclic_coloring(cycle(5), phi)


def test_acyclic_limit():
    with pytest.raises(LimitError):
        acyclic_chromatic_number_exact(empty_graph(11))


def test_star_chromatics():
    assert chromatic_number_exact(star(3))[0] == 2
    assert acyclic_chromatic_number_exact(star(3))[0] == 2
