import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aspectra import graph as gr
from aspectra.census import random_graphs
from aspectra.formats import (ParseError, encode_graph6, parse_builder, parse_edge_list, parse_graph6, read_graph,
                              read_graph6_stream)


def _nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_k4_by_hand():
    assert parse_graph6("C~") == gr.complete(4)
    assert encode_graph6(gr.complete(4)) == "C~"


def test_two_vertices():
    assert encode_graph6(gr.complete(2)) == "A_"
    assert encode_graph6(gr.empty(2)) == "A?"
    assert parse_graph6("A_") == gr.complete(2)


def test_header_is_stripped():
    assert parse_graph6(">>graph6<<C~") == gr.complete(4)


@pytest.mark.parametrize("bad, offset", [("", 0), ("C~~", 1), ("C\x7f", 1), ("B~", 1), ("C", 1), ("~?", 2)])
def test_malformed_input_reports_offset(bad, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(bad)
    assert info.value.offset == offset


def test_large_order_fields():
    big = gr.path(70)
    code = encode_graph6(big)
    assert code.startswith("~") and parse_graph6(code) == big
    assert code == _nx_graph6(big)


def test_round_trip_corpus_matches_networkx(tmp_path):
    corpus = [encode_graph6(g) for g in random_graphs(1000, (1, 30), seed=11)]
    for line in corpus:
        assert encode_graph6(parse_graph6(line)) == line
        assert line == _nx_graph6(parse_graph6(line))
    path = tmp_path / "corpus.g6"
    path.write_text(">>graph6<<" + corpus[0] + "\n" + "\n".join(corpus[1:]) + "\n")
    assert [encode_graph6(g) for g in read_graph6_stream(path)] == corpus


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 40), st.data())
def test_graph6_round_trip_property(order, data):
    pairs = [(i, j) for j in range(order) for i in range(j)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    g = gr.Graph(order, edges)
    assert parse_graph6(encode_graph6(g)) == g


def test_edge_list():
    g = parse_edge_list("# triangle plus isolated\n0 1\n1 2\n\n2 0\n4\n")
    assert g.order == 4 and g.size() == 3
    with pytest.raises(ParseError):
        parse_edge_list("0 x\n")
    with pytest.raises(ParseError):
        parse_edge_list("0 1 2\n")


def test_builder_expressions():
    assert parse_builder("join(K1,union(K23,E1))") == gr.exception_graph(25)
    assert parse_builder("Gstar(25)") == gr.exception_graph(25)
    assert parse_builder("G1(25, 1)") == gr.exception_graph(25)
    assert parse_builder("copies(2, P3)") == gr.copies(2, gr.path(3))
    assert parse_builder("S4") == gr.star(4)
    assert parse_builder("C5") == gr.cycle(5)
    for bad in ("join(K1)", "K", "Q5", "G2(5,1)", "K3 K4", "C2", "G1(5,6)"):
        with pytest.raises(ParseError):
            parse_builder(bad)


def test_read_graph_dispatch(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("0 1\n1 2\n")
    assert read_graph(f"@{f}") == gr.path(3)
    assert read_graph("P6") == gr.path(6)
    assert read_graph("C~") == gr.complete(4)
