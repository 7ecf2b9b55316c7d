from __future__ import annotations

import numpy as np
import pytest
from conftest import graphs
from hypothesis import given, strategies as st

from indcycles.graph import Graph, GraphError, build, induced_subgraph, mask_of, members


def test_build_and_queries():
    g = build(4, [(0, 1), (1, 2), (2, 3)])
    assert g.num_edges == 3
    assert g.neighbors(1) == [0, 2]
    assert g.has_edge(2, 3) and not g.has_edge(0, 3)
    assert g.degrees() == [1, 2, 2, 1]
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build(4, edges)


def test_asymmetric_rows_rejected():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0]).check()


def test_mask_helpers():
    assert members(mask_of([5, 0, 3])) == [0, 3, 5]


@given(graphs(max_n=9), st.data())
def test_relabel_preserves_structure(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    h = g.relabel(perm)
    assert h.num_edges == g.num_edges
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
    assert sorted(h.degrees()) == sorted(g.degrees())


@given(graphs(min_n=2, max_n=9), st.data())
def test_edge_toggles(g, data):
    u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    assert g.with_edge(u, v).has_edge(v, u)
    assert not g.without_edge(u, v).has_edge(u, v)


@given(graphs(max_n=9))
def test_word_and_csr_views_agree(g):
    words = g.adjacency_words()
    indptr, indices = g.csr()
    for v in range(g.n):
        row = sum(int(w) << (64 * i) for i, w in enumerate(words[v]))
        assert row == g.rows[v]
        assert list(indices[indptr[v]:indptr[v + 1]]) == g.neighbors(v)


def test_wide_words():
    g = build(130, [(0, 129), (64, 65)])
    words = g.adjacency_words()
    assert words.shape == (130, 3)
    assert words[0, 2] == np.uint64(1 << 1)


def test_induced_subgraph_maps_labels():
    g = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    h, old = induced_subgraph(g, [4, 0, 2])
    assert old == [0, 2, 4]
    assert h.edges() == [(0, 2)]
