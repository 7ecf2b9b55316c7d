from __future__ import annotations

import os
import sys

import pytest

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from indcycles.graph import Graph  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picked = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    rows = [0] * n
    for (u, v), on in zip(pairs, picked):
        if on:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, rows)


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(list(range(n))))


# one summary line per acceptance criterion
_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.obj.__doc__ or item.name).strip().splitlines()[0]
        _ACCEPTANCE.append((item.name, doc, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, doc, status in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{status}  {doc}")
