"""graph6 encoding round-trips and error handling."""

import networkx as nx
import pytest
from hypothesis import given, settings

from gamecol.graph6 import Graph6Error, parse_graph6, write_graph6
from gamecol.graphs import Graph, canonical_key, complete, cycle, empty_graph

from test_graphs import small_graphs


def test_single_vertex():
    assert write_graph6(empty_graph(1)) == "@"
    assert parse_graph6("@").n == 1


def test_k4_round_trip():
    s = write_graph6(complete(4))
    back = parse_graph6(s)
    assert back.edges == complete(4).edges


def test_d_style_string_round_trips():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert write_graph6(g) == "D?{"


@given(small_graphs(8))
@settings(max_examples=100, deadline=None)
def test_round_trip_random(g):
    text = write_graph6(g)
    back = parse_graph6(text)
    assert back.n == g.n
    assert back.edges == g.edges
    assert write_graph6(back) == text


@given(small_graphs(7))
@settings(max_examples=60, deadline=None)
def test_matches_networkx(g):
    h = nx.empty_graph(g.n)
    h.add_edges_from(g.edge_list())
    theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert write_graph6(g) == theirs


def test_parse_rejects_empty():
    with pytest.raises(Graph6Error):
        parse_graph6("")


def test_parse_rejects_bad_length():
    with pytest.raises(Graph6Error):
        parse_graph6("D?")  # n=5 needs 2 payload chars


def test_parse_rejects_out_of_range_byte():
    with pytest.raises(Graph6Error):
        parse_graph6("D?\x1f")


def test_parse_rejects_nonzero_padding():
    # n=2: one pair, 5 padding bits; 63+1 = '@' has a padding bit set
    with pytest.raises(Graph6Error):
        parse_graph6("A@")
    assert parse_graph6("A_").edge_count == 1


def test_write_rejects_large_graph():
    with pytest.raises(Graph6Error):
        write_graph6(empty_graph(63))


def test_optional_header_accepted():
    assert parse_graph6(">>graph6<<C~").edges == complete(4).edges


def test_cycles_round_trip_canonically():
    for n in range(3, 10):
        g = cycle(n)
        assert canonical_key(parse_graph6(write_graph6(g))) == canonical_key(g)
