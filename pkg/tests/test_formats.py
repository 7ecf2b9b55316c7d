from __future__ import annotations

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given

from indcycles.formats import Graph6Error, dot_export, graph6_decode, graph6_encode, read_graph6_stream
from indcycles.graph import Graph, build


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    ours = graph6_encode(g)
    theirs = nx.to_graph6_bytes(_to_nx(g), header=False).strip()
    assert ours == theirs


def test_graph6_large_size_prefix():
    g = build(70, [(0, 69), (3, 40)])
    code = graph6_encode(g)
    assert code[:1] == b"~"
    assert graph6_decode(code) == g
    assert code == nx.to_graph6_bytes(_to_nx(g), header=False).strip()


def test_known_strings():
    assert graph6_encode(build(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])) == b"D~{"
    assert graph6_decode(">>graph6<<A_").edges() == [(0, 1)]


@pytest.mark.parametrize("bad", ["", "D~", "D~{{", "\x10", "D~\x7f"])
def test_decode_errors(bad):
    with pytest.raises(Graph6Error):
        graph6_decode(bad)


def test_stream_reports_line_numbers():
    items = list(read_graph6_stream(["A_", "", "zz", "D~{"]))
    assert [i for i, _ in items] == [1, 3, 4]
    assert isinstance(items[1][1], Graph6Error)
    assert items[2][1].num_edges == 10


def test_dot_export():
    g = build(3, [(0, 1), (1, 2)])
    text = dot_export(g, highlight=[1], names={"a": 0, "b": 1})
    assert text.startswith("graph G {")
    assert 'label="a"' in text and "fillcolor" in text
    assert "  0 -- 1;" in text and "  1 -- 2;" in text
