"""Optional edges of the required form and their effect on the C5 census.

With a single C-vertex, adding both ``z5 c1`` and ``c1 z6`` creates the
induced 5-cycle ``z5 c1 z6 u1 u2``; every other combination leaves the
census unchanged.
"""

from __future__ import annotations

import numpy as np
import pytest
from oracles import is_induced_cycle, subset_count

from indcycles.census import count_induced_cycles
from indcycles.constructors import RequiredFormSpec, make_required_form
from indcycles.verify import size_options

PAIR = (("z5", "c1"), ("c1", "z6"))


def _bits(spec: RequiredFormSpec) -> int:
    names = spec.optional_edge_names()
    return sum(1 << names.index(e) for e in PAIR)


def _census(spec):
    return count_induced_cycles(make_required_form(spec).graph, 5).total


def test_extra_cycle_at_single_c_vertex_matches_oracle():
    spec = RequiredFormSpec(19, None, RequiredFormSpec(19).full_mask())
    con = make_required_form(spec)
    base = make_required_form(RequiredFormSpec(19)).graph
    assert subset_count(con.graph, 5)[0] == subset_count(base, 5)[0] + 1 == 78
    assert is_induced_cycle(con.graph, con.labels(["z5", "c1", "z6", "u1", "u2"]))
    assert not is_induced_cycle(base, con.labels(["z5", "c1", "z6", "u1", "u2"]))


@pytest.mark.parametrize("n,opt", [(19, None), (20, "first"), (21, "second")])
def test_single_c_vertex_rule(n, opt):
    spec = RequiredFormSpec(n, opt)
    assert spec.class_sizes()[2] == 1
    base = _census(spec)
    pair = _bits(spec)
    rng = np.random.default_rng(n)
    for mask in [0, spec.full_mask(), pair] + [int(x) for x in rng.integers(0, spec.full_mask() + 1, 40)]:
        got = _census(RequiredFormSpec(n, opt, mask))
        assert got == base + ((mask & pair) == pair), hex(mask)


def test_invariance_whenever_c_has_two_vertices():
    rng = np.random.default_rng(99)
    for n in range(20, 32):
        for opt in size_options(n):
            spec = RequiredFormSpec(n, opt)
            if spec.class_sizes()[2] < 2:
                continue
            base = _census(spec)
            for mask in [spec.full_mask()] + [int(x) for x in rng.integers(0, spec.full_mask() + 1, 12)]:
                assert _census(RequiredFormSpec(n, opt, mask)) == base, (n, opt, hex(mask))
