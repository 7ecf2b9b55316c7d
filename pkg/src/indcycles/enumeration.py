"""Isomorph-free generation of small planar graphs.

Graphs grow one vertex at a time. A child is kept only when the new
vertex lies in the automorphism orbit picked out by the canonical
labelling (the canonical deletion), so each isomorphism class arises
from exactly one parent class; duplicates from the same parent are
removed by comparing canonical codes. Planarity is hereditary, so
non-planar children are dropped and never extended.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

import numpy as np

from . import _canon_kernels as _ck
from .graph import Graph
from .formats import graph6_encode
from .planar import is_planar

__all__ = ["EnumerationError", "MAX_ENUM_N", "canonical_form", "canonical_code", "enumerate_planar", "count_planar"]

log = logging.getLogger(__name__)

MAX_ENUM_N = 9


class EnumerationError(ValueError):
    pass


def _rows_array(g: Graph) -> np.ndarray:
    return np.array(g.rows, dtype=np.int64)


def _check_small(g: Graph) -> None:
    if g.n > _ck.MAX_N:
        raise EnumerationError(f"canonical forms are limited to {_ck.MAX_N} vertices")


def canonical_code(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant code: equal codes iff isomorphic graphs."""
    _check_small(g)
    if g.n == 0:
        return (0,)
    perm = np.zeros(g.n, dtype=np.int64)
    best = np.zeros(g.n, dtype=np.int64)
    _ck.canonical(_rows_array(g), g.n, perm, best)
    return (g.n,) + tuple(int(x) for x in best)


def canonical_form(g: Graph) -> Graph:
    """The canonically relabelled copy of ``g``."""
    _check_small(g)
    if g.n == 0:
        return g
    perm = np.zeros(g.n, dtype=np.int64)
    best = np.zeros(g.n, dtype=np.int64)
    _ck.canonical(_rows_array(g), g.n, perm, best)
    return _relabel_by_positions(g.rows, perm)


def _relabel_by_positions(rows, perm) -> Graph:
    n = len(perm)
    new_of = [0] * n
    for j, v in enumerate(perm):
        new_of[int(v)] = j
    return Graph(n, list(rows)).relabel(new_of)


def _children(parent: Graph) -> list[Graph]:
    m = parent.n
    n = m + 1
    size = 1 << m
    acc_s = np.zeros(size, dtype=np.int64)
    acc_perm = np.zeros((size, n), dtype=np.int64)
    acc_code = np.zeros((size, n), dtype=np.int64)
    prow = _rows_array(parent) if m else np.zeros(0, dtype=np.int64)
    count = _ck.augment(prow, m, acc_s, acc_perm, acc_code)
    seen: set[bytes] = set()
    out = []
    limit = 3 * n - 6
    for i in range(count):
        key = acc_code[i].tobytes()
        if key in seen:
            continue
        seen.add(key)
        s = int(acc_s[i])
        rows = [r | ((s >> j) & 1) << m for j, r in enumerate(parent.rows)] + [s]
        child = Graph(n, rows)
        if n >= 3 and child.num_edges > limit:
            continue
        # the new vertex has maximum degree, so degree <= 2 means a union of paths and cycles
        if bin(s).count("1") > 2 and not is_planar(child):
            continue
        out.append(_relabel_by_positions(rows, acc_perm[i]))
    return out


def _children_batch(parents: list[Graph]) -> list[Graph]:
    out = []
    for p in parents:
        out.extend(_children(p))
    return out


def _sort_key(g: Graph) -> bytes:
    return graph6_encode(g)


def enumerate_planar(
    n: int,
    workers: int = 1,
    sink: Callable[[Graph], None] | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> list[Graph]:
    """All planar graphs on ``n`` vertices up to isomorphism, canonically labelled.

    The result is sorted by graph6 string so it does not depend on the
    worker count. ``sink`` (if given) receives each graph in that order.
    """
    if not isinstance(n, int) or n < 0:
        raise EnumerationError(f"n must be a non-negative integer, got {n!r}")
    if n > MAX_ENUM_N:
        raise EnumerationError(f"planar enumeration is capped at n = {MAX_ENUM_N}")
    level = [Graph(0, [])]
    for size in range(1, n + 1):
        if workers > 1 and len(level) >= 4 * workers:
            chunks = [level[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                level = [g for part in pool.map(_children_batch, chunks) for g in part]
        else:
            level = _children_batch(level)
        level.sort(key=_sort_key)
        log.debug("planar graphs on %d vertices: %d", size, len(level))
        if progress is not None:
            progress(size, len(level))
    if sink is not None:
        for g in level:
            sink(g)
    return level


def count_planar(n: int, workers: int = 1) -> int:
    return len(enumerate_planar(n, workers))


def dedupe(graphs: Iterable[Graph]) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted."""
    out = {}
    for g in graphs:
        c = canonical_form(g)
        out[graph6_encode(c)] = c
    return [out[k] for k in sorted(out)]
