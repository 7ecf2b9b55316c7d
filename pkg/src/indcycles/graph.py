"""Immutable simple undirected graphs with bitset adjacency rows.

Each row is a Python int whose bit ``j`` is set iff ``j`` is a neighbour,
so graphs of any order share one type. Kernels receive the rows packed
into a ``(n, words)`` ``uint64`` array, one machine word per row whenever
``n <= 64``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphError",
    "build",
    "induced_subgraph",
    "mask_of",
    "members",
]

_WORD = 64
_WORD_MASK = (1 << _WORD) - 1


class GraphError(ValueError):
    """Invalid graph construction input."""


def mask_of(vertices: Iterable[int]) -> int:
    """Bitset of an iterable of vertex labels."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Sorted vertex labels of a bitset."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; use :func:`build` or the
    ``with_edge``/``without_edge`` helpers to derive new graphs.
    """

    __slots__ = ("n", "rows", "_words", "_csr")

    def __init__(self, n: int, rows: Sequence[int]):
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        self.n = n
        self.rows = tuple(rows)
        self._words = None
        self._csr = None

    # -- basic queries -------------------------------------------------
    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return members(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in members(self.rows[u] >> (u + 1) << (u + 1))]

    def iter_non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.rows[u] >> v & 1:
                    yield u, v

    # -- derived graphs ------------------------------------------------
    def with_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[x] for x in members(self.rows[v]))
        return Graph(self.n, rows)

    # -- kernel views --------------------------------------------------
    @property
    def num_words(self) -> int:
        return max(1, -(-self.n // _WORD))

    def adjacency_words(self) -> np.ndarray:
        """Rows packed as a read-only ``(n, num_words)`` uint64 array."""
        if self._words is None:
            w = self.num_words
            arr = np.zeros((self.n, w), dtype=np.uint64)
            for v, row in enumerate(self.rows):
                for i in range(w):
                    arr[v, i] = (row >> (_WORD * i)) & _WORD_MASK
            arr.setflags(write=False)
            self._words = arr
        return self._words

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Sorted neighbour lists as ``(indptr, indices)`` int64 arrays."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            flat: list[int] = []
            for v in range(self.n):
                nb = members(self.rows[v])
                flat.extend(nb)
                indptr[v + 1] = len(flat)
            indices = np.asarray(flat, dtype=np.int64)
            indptr.setflags(write=False)
            indices.setflags(write=False)
            self._csr = (indptr, indices)
        return self._csr

    def check(self) -> None:
        """Full scan of the symmetry and irreflexivity invariants."""
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in members(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}->{u}")


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise GraphError(f"self-loop at {u}")


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices; duplicate pairs collapse."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G[S]`` relabelled to ``0..|S|-1`` in increasing label order.

    Returns the subgraph and the list mapping each new label to the
    original one.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    sel = mask_of(keep)
    rows = [mask_of(index[u] for u in members(g.rows[v] & sel)) for v in keep]
    return Graph(len(keep), rows), keep
