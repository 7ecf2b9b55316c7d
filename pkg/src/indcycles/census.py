"""Exact induced cycle census.

Cycles are grown as induced paths from their minimum vertex; a new path
vertex adjacent to any earlier non-predecessor is pruned immediately, so
every surviving closed path is an induced cycle and counts stay exact.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _census_kernels as _k
from .graph import Graph, members

__all__ = [
    "CensusError",
    "CycleCensus",
    "PathNeighborhoodSplit",
    "count_induced_cycles",
    "count_induced_cycles_through_path",
    "xy_split",
    "principal_neighbors",
    "per_vertex_min_profile",
    "census_csv",
]


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CycleCensus:
    """Induced ``k``-cycle counts of one graph.

    ``cycles`` holds canonical vertex sequences (smallest label first,
    then the neighbour with the smaller label) when listing was requested.
    """

    k: int
    total: int
    per_vertex: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)


def _arrays(g: Graph):
    indptr, indices = g.csr()
    return g.adjacency_words(), indptr, indices


def count_induced_cycles(g: Graph, k: int, list_them: bool = False) -> CycleCensus:
    if not 3 <= k:
        raise CensusError(f"cycle length must be at least 3, got {k}")
    if k > g.n:
        raise CensusError(f"cycle length {k} exceeds vertex count {g.n}")
    adj, indptr, indices = _arrays(g)
    per_vertex = np.zeros(g.n, dtype=np.int64)
    empty = np.zeros((0, k), dtype=np.int64)
    total = int(_k.census(adj, indptr, indices, k, per_vertex, empty, False))
    cycles = None
    if list_them:
        out = np.zeros((total, k), dtype=np.int64)
        scratch = np.zeros(g.n, dtype=np.int64)
        _k.census(adj, indptr, indices, k, scratch, out, True)
        cycles = tuple(tuple(int(x) for x in row) for row in out)
    return CycleCensus(k, total, tuple(int(c) for c in per_vertex), cycles)


def _prefix_is_induced_path(g: Graph, path: Sequence[int], k: int) -> bool:
    r = len(path)
    for i in range(r):
        for j in range(i + 1, r):
            adjacent = g.has_edge(path[i], path[j])
            if j == i + 1:
                if not adjacent:
                    return False
            elif adjacent and not (i == 0 and j == k - 1):
                return False
    return True


def _count_from_prefix(g: Graph, path: Sequence[int], k: int, store: bool = False):
    """Induced k-cycles containing ``path`` as consecutive vertices, in order."""
    r = len(path)
    if len(set(path)) != r or r > k:
        return 0, []
    if not _prefix_is_induced_path(g, path, k):
        return 0, []
    if r == k:
        closed = g.has_edge(path[0], path[-1])
        return int(closed), [tuple(path)] if closed and store else []
    adj, indptr, indices = _arrays(g)
    buf = np.zeros(k, dtype=np.int64)
    buf[:r] = path
    per_vertex = np.zeros(g.n, dtype=np.int64)
    empty = np.zeros((0, k), dtype=np.int64)
    total = int(_k.search_from_prefix(adj, indptr, indices, k, buf, r, 0, False, per_vertex, empty, False, 0))
    found = []
    if store and total:
        out = np.zeros((total, k), dtype=np.int64)
        buf[:r] = path
        _k.search_from_prefix(adj, indptr, indices, k, buf, r, 0, False, per_vertex, out, True, 0)
        found = [tuple(int(x) for x in row) for row in out]
    return total, found


def count_induced_cycles_through_path(g: Graph, path: Sequence[int], k: int) -> int:
    """Number of induced ``k``-cycles in which ``u, v, w`` appear consecutively."""
    u, v, w = path
    if u == w or not (g.has_edge(u, v) and g.has_edge(v, w)):
        raise CensusError(f"{u}-{v}-{w} is not a path in the graph")
    if not 3 <= k <= g.n:
        raise CensusError(f"cycle length {k} out of range")
    return _count_from_prefix(g, (u, v, w), k)[0]


def cycles_through_path(g: Graph, path: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """The induced k-cycles counted by :func:`count_induced_cycles_through_path`,
    each written starting ``u, v, w, ...``."""
    return _count_from_prefix(g, tuple(path), k, store=True)[1]


@dataclass(frozen=True)
class PathNeighborhoodSplit:
    """Exclusive neighbourhoods of the ends of a path ``u-v-w``.

    ``X`` are the neighbours of ``u`` outside ``N[w]`` that see a
    neighbour of ``w`` outside ``N[u]``; ``Y`` is the mirror image.
    """

    u: int
    v: int
    w: int
    X: frozenset[int]
    Y: frozenset[int]
    cross_edges: tuple[tuple[int, int], ...]

    def cross_graph_is_forest(self) -> bool:
        parent = {x: x for x in self.X | self.Y}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for x, y in self.cross_edges:
            rx, ry = find(x), find(y)
            if rx == ry:
                return False
            parent[rx] = ry
        return True


def xy_split(g: Graph, u: int, v: int, w: int) -> PathNeighborhoodSplit:
    if u == w or not (g.has_edge(u, v) and g.has_edge(v, w)):
        raise CensusError(f"{u} and {w} must be distinct neighbours of {v}")
    x0 = g.rows[u] & ~(g.rows[w] | 1 << w)
    y0 = g.rows[w] & ~(g.rows[u] | 1 << u)
    xs = [x for x in members(x0) if g.rows[x] & y0]
    ys = [y for y in members(y0) if g.rows[y] & x0]
    ymask = sum(1 << y for y in ys)
    cross = tuple((x, y) for x in xs for y in members(g.rows[x] & ymask))
    return PathNeighborhoodSplit(u, v, w, frozenset(xs), frozenset(ys), cross)


def principal_neighbors(g: Graph, v: int) -> frozenset[int]:
    """Neighbours of ``v`` sharing an induced 5-cycle with it.

    Adjacent vertices on an induced cycle are consecutive on it, so this
    asks for an induced 5-cycle through the edge ``u v``.
    """
    if g.n < 5:
        return frozenset()
    return frozenset(u for u in g.neighbors(v) if _count_from_prefix(g, (u, v), 5)[0] > 0)


def per_vertex_min_profile(g: Graph, k: int = 5) -> tuple[int, int]:
    """``(vertex, count)`` for the vertex in fewest induced k-cycles, lowest label on ties."""
    c = count_induced_cycles(g, k)
    best = min(range(g.n), key=lambda v: (c.per_vertex[v], v))
    return best, c.per_vertex[best]


def census_csv(
    rows: Iterable[tuple[str, CycleCensus]],
    through: dict[str, int] | None = None,
    per_vertex: bool = False,
) -> str:
    """CSV with one row per ``(graph_id, census)``: id, k, total, min/max per-vertex.

    ``through`` adds a path-count column; ``per_vertex`` adds the full
    per-vertex vector, space separated.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["graph_id", "k", "total", "min_per_vertex", "max_per_vertex"]
    if through is not None:
        header.append("through_path")
    if per_vertex:
        header.append("per_vertex")
    writer.writerow(header)
    for gid, c in rows:
        pv = c.per_vertex
        row = [gid, c.k, c.total, min(pv) if pv else 0, max(pv) if pv else 0]
        if through is not None:
            row.append(through.get(gid, ""))
        if per_vertex:
            row.append(" ".join(map(str, pv)))
        writer.writerow(row)
    return buf.getvalue()
