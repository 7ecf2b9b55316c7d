from __future__ import annotations

from collections import defaultdict

import networkx as nx
import numpy as np
import pytest
from conftest import graphs
from hypothesis import given, strategies as st
from oracles import brute_canonical, random_graph

from indcycles.enumeration import (
    EnumerationError,
    canonical_code,
    canonical_form,
    count_planar,
    dedupe,
    enumerate_planar,
)
from indcycles.formats import graph6_encode
from indcycles.graph import build
from indcycles.planar import is_planar


@pytest.fixture(scope="module")
def atlas_planar():
    """Planar graphs from the networkx atlas (all graphs on <= 7 vertices), by n."""
    out = defaultdict(list)
    for h in nx.graph_atlas_g():
        if nx.check_planarity(h)[0]:
            out[h.number_of_nodes()].append(build(h.number_of_nodes(), h.edges()))
    return out


@given(graphs(max_n=6), st.data())
def test_canonical_code_is_invariant(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_code(g) == canonical_code(g.relabel(perm))
    assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_canonical_code_separates_classes():
    """Codes agree exactly when the all-permutations oracle says isomorphic."""
    rng = np.random.default_rng(3)
    by_code, by_oracle = {}, {}
    for _ in range(400):
        n = int(rng.integers(4, 7))
        g = random_graph(n, 0.5, rng)
        by_code.setdefault(canonical_code(g), set()).add(brute_canonical(g))
        by_oracle.setdefault(brute_canonical(g), set()).add(canonical_code(g))
    assert all(len(v) == 1 for v in by_code.values())
    assert all(len(v) == 1 for v in by_oracle.values())


@pytest.mark.parametrize("n", range(0, 8))
def test_enumeration_matches_atlas(n, atlas_planar):
    ours = enumerate_planar(n)
    assert all(is_planar(g) for g in ours)
    assert len({canonical_code(g) for g in ours}) == len(ours)
    assert {canonical_code(g) for g in ours} == {canonical_code(g) for g in atlas_planar[n]}


@pytest.mark.slow
def test_eight_vertices():
    # unlabelled planar graphs on 8 vertices, OEIS A005470
    assert count_planar(8) == 6966


def test_output_sorted_and_sink():
    seen = []
    out = enumerate_planar(5, sink=seen.append)
    codes = [graph6_encode(g) for g in out]
    assert codes == sorted(codes)
    assert len(seen) == len(out) == 33


def test_workers_give_same_output():
    assert [graph6_encode(g) for g in enumerate_planar(6, workers=2)] == [
        graph6_encode(g) for g in enumerate_planar(6)
    ]


def test_dedupe():
    g = build(4, [(0, 1), (1, 2)])
    assert len(dedupe([g, g.relabel([3, 2, 1, 0]), build(4, [(0, 1)])])) == 2


def test_limits():
    with pytest.raises(EnumerationError):
        enumerate_planar(10)
    with pytest.raises(EnumerationError):
        enumerate_planar(-1)
