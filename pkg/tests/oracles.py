"""Independent reference implementations used only by the tests.

Each one is deliberately naive: it shares no code with the package beyond
the ``Graph`` container.
"""

from __future__ import annotations

import itertools

import numpy as np

from indcycles.graph import Graph


def is_induced_cycle(g: Graph, vs) -> bool:
    """Whether ``vs`` induces exactly a cycle on all of its vertices."""
    vs = list(vs)
    k = len(vs)
    sub = {v: [u for u in vs if g.has_edge(u, v)] for v in vs}
    if any(len(nb) != 2 for nb in sub.values()):
        return False
    # 2-regular; connected iff a single cycle
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        x = stack.pop()
        for y in sub[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == k


def subset_count(g: Graph, k: int) -> tuple[int, list[int]]:
    """(total, per-vertex) induced k-cycle counts by scanning all k-subsets."""
    total = 0
    per = [0] * g.n
    for vs in itertools.combinations(range(g.n), k):
        if is_induced_cycle(g, vs):
            total += 1
            for v in vs:
                per[v] += 1
    return total, per


def subset_count_through(g: Graph, path, k: int) -> int:
    """Induced k-cycles that contain ``path`` (three vertices) as a consecutive segment."""
    u, v, w = path
    rest = [x for x in range(g.n) if x not in (u, v, w)]
    total = 0
    for extra in itertools.combinations(rest, k - 3):
        vs = (u, v, w) + extra
        if is_induced_cycle(g, vs) and g.has_edge(u, v) and g.has_edge(v, w):
            total += 1
    return total


# --- Kuratowski subdivisions ------------------------------------------------


def _disjoint_paths(g: Graph, pairs, free: frozenset) -> bool:
    """Can every pair be joined by a path whose interior uses unused free vertices?"""
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]
    if g.has_edge(a, b) and _disjoint_paths(g, rest, free):
        return True
    for length in range(1, len(free) + 1):
        for interior in itertools.permutations(free, length):
            walk = (a,) + interior + (b,)
            if all(g.has_edge(walk[i], walk[i + 1]) for i in range(len(walk) - 1)):
                if _disjoint_paths(g, rest, free - set(interior)):
                    return True
    return False


def has_kuratowski_subdivision(g: Graph) -> bool:
    """Brute force K5 / K3,3 subdivision search; intended for n <= 7."""
    V = range(g.n)
    for branch in itertools.combinations(V, 5):
        free = frozenset(V) - set(branch)
        if _disjoint_paths(g, list(itertools.combinations(branch, 2)), free):
            return True
    for six in itertools.combinations(V, 6):
        free = frozenset(V) - set(six)
        for left in itertools.combinations(six, 3):
            if six[0] not in left:
                continue  # each bipartition once
            right = [x for x in six if x not in left]
            if _disjoint_paths(g, [(a, b) for a in left for b in right], free):
                return True
    return False


# --- canonical forms --------------------------------------------------------


def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


def brute_canonical(g: Graph) -> bytes:
    """Lexicographically largest upper-triangle bit string over all n! relabellings."""
    n = g.n
    if n <= 1:
        return bytes([n])
    adj = np.array([[g.has_edge(u, v) for v in range(n)] for u in range(n)], dtype=np.uint8)
    perms = _perm_table(n)
    iu, ju = np.triu_indices(n, 1)
    # permuted[p, i, j] = adj[perm[i], perm[j]]
    bits = adj[perms[:, iu], perms[:, ju]]
    order = np.lexsort(bits.T[::-1])
    return bytes([n]) + bits[order[-1]].tobytes()


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def all_graphs(n: int):
    """Every labelled graph on n vertices (use for n <= 5 or so)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, rows)
