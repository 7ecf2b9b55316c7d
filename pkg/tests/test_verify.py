from __future__ import annotations

import pytest

from indcycles.graph import build
from indcycles.verify import SUITES, SuiteReport, xy_forest_violations, run_suite, size_options


@pytest.mark.parametrize("name", ["formulas", "c4-extremal", "c5-extremal", "lemma5", "faces", "recursion", "blowup"])
def test_fast_suites_pass(name):
    report = run_suite(name)
    assert report.checks
    assert report.ok, report.failures()


def test_report_rendering():
    r = SuiteReport("demo")
    r.add("one", 1, 1)
    r.add("two", 2, 3)
    assert not r.ok and [c.name for c in r.failures()] == ["two"]
    md = r.to_markdown()
    assert md.startswith("## demo: FAIL (1/2")
    assert "| two | 2 | 3 | NO |" in md
    assert r.to_csv().splitlines()[2] == "demo,two,2,3,0"


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
    assert "face-cases" in SUITES


def test_size_options():
    assert size_options(19) == [None]
    assert size_options(20) == ["first", "second"]


def test_xy_forest_on_a_small_graph():
    c5 = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert xy_forest_violations(c5) == (10, 0)
