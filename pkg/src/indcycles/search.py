"""Extremal searches for induced cycles over planar graphs.

``exhaustive_max`` scans the full isomorph-free enumeration; ``anneal_max``
runs simulated annealing over planar graphs with edge add, delete and
swap moves. Both return an :class:`ExtremalRecord`.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .census import count_induced_cycles
from .constructors import RequiredFormSpec, make_h_minus_z, make_required_form
from .enumeration import MAX_ENUM_N, enumerate_planar
from .formats import graph6_decode, graph6_encode
from .graph import Graph
from .planar import is_planar

__all__ = ["SearchError", "ExtremalRecord", "SearchConfig", "exhaustive_max", "anneal_max", "initial_graph"]


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    k: int
    count: int
    edges: int
    graph6: str
    method: str
    exhaustive: bool
    details: dict = field(default_factory=dict)

    def witness(self) -> Graph:
        return graph6_decode(self.graph6)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ExtremalRecord:
        return cls(**json.loads(text))


def _census(g: Graph, k: int) -> int:
    if g.n < k:
        return 0
    return count_induced_cycles(g, k).total


def exhaustive_max(n: int, k: int, workers: int = 1) -> ExtremalRecord:
    """Exact maximum over all planar graphs on ``n <= 9`` vertices.

    Ties go to fewer edges, then to the smaller graph6 string.
    """
    if n > MAX_ENUM_N:
        raise SearchError(f"exhaustive search is capped at n = {MAX_ENUM_N}")
    if k < 3:
        raise SearchError("cycle length must be at least 3")
    best = None
    total = 0
    for g in enumerate_planar(n, workers):
        total += 1
        c = _census(g, k)
        key = (-c, g.num_edges, graph6_encode(g))
        if best is None or key < best[0]:
            best = (key, g, c)
    _, g, c = best
    return ExtremalRecord(
        n, k, c, g.num_edges, graph6_encode(g).decode(), "exhaustive", True,
        {"graphs_scanned": total},
    )


@dataclass(frozen=True)
class SearchConfig:
    """Annealing parameters; a fixed ``seed`` fixes the whole run.

    ``start`` is ``"random"`` (random planar graph), ``"skeleton"``
    (balanced triangle-and-hub skeleton) or ``"required-form"`` (n >= 19).
    """

    n: int
    k: int = 5
    weights: tuple[float, float, float] = (0.4, 0.2, 0.4)
    t_start: float = 2.0
    t_end: float = 0.05
    steps: int = 4000
    restarts: int = 32
    seed: int = 0
    start: str = "random"
    workers: int = 1

    def __post_init__(self):
        if not 3 <= self.n <= 64:
            raise SearchError("annealing supports 3 <= n <= 64")
        if not 3 <= self.k <= self.n:
            raise SearchError(f"cycle length must lie in 3..{self.n}")
        if self.start not in ("random", "skeleton", "required-form"):
            raise SearchError(f"unknown start {self.start!r}")
        if self.start == "required-form" and self.n < 19:
            raise SearchError("required-form starts need n >= 19")
        if self.restarts < 1 or self.steps < 0:
            raise SearchError("restarts must be positive and steps non-negative")
        if len(self.weights) != 3 or min(self.weights) < 0 or sum(self.weights) <= 0:
            raise SearchError("weights are three non-negative numbers (add, delete, swap)")
        if not self.t_start >= self.t_end > 0:
            raise SearchError("need t_start >= t_end > 0")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["weights"] = list(self.weights)
        d.pop("workers")
        return d


def _random_planar(n: int, rng: np.random.Generator) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    order = rng.permutation(len(pairs))
    target = int(rng.integers(n, 2 * n + 1))
    g = Graph(n, [0] * n)
    for idx in order:
        if g.num_edges >= target:
            break
        u, v = pairs[idx]
        h = g.with_edge(u, v)
        if is_planar(h):
            g = h
    return g


def _skeleton(n: int) -> Graph:
    q, r = divmod(n - 4, 3)
    sizes = [q + (i < r) for i in range(3)]
    if min(sizes) < 1:
        raise SearchError("skeleton starts need n >= 7")
    return make_h_minus_z(*sizes).graph


def initial_graph(config: SearchConfig, rng: np.random.Generator) -> Graph:
    if config.start == "required-form":
        return make_required_form(RequiredFormSpec(config.n)).graph
    if config.start == "skeleton":
        return _skeleton(config.n)
    return _random_planar(config.n, rng)


def _random_non_edge(g: Graph, rng: np.random.Generator):
    n = g.n
    if g.num_edges >= n * (n - 1) // 2:
        return None
    while True:
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        if not g.has_edge(u, v):
            return u, v


def _propose(g: Graph, move: int, rng: np.random.Generator) -> Graph | None:
    edges = g.edges()
    if move == 0:
        if g.n >= 3 and g.num_edges >= 3 * g.n - 6:
            return None
        pair = _random_non_edge(g, rng)
        return None if pair is None else g.with_edge(*pair)
    if not edges:
        return None
    u, v = edges[int(rng.integers(len(edges)))]
    h = g.without_edge(u, v)
    if move == 1:
        return h
    pair = _random_non_edge(h, rng)
    if pair is None or pair == (u, v) or pair == (v, u):
        return None
    return h.with_edge(*pair)


def _one_restart(config: SearchConfig, seq: np.random.SeedSequence, index: int):
    rng = np.random.default_rng(seq)
    g = initial_graph(config, rng)
    n, k = config.n, config.k
    scale = 1.0 / (3 * n)  # edge penalty below one cycle, so only breaks ties

    def score(c, h):
        return c - scale * h.num_edges

    cur_c = _census(g, k)
    cur = score(cur_c, g)
    best = (cur_c, -g.num_edges, graph6_encode(g), g)
    w = np.asarray(config.weights, dtype=float)
    w = w / w.sum()
    steps = config.steps
    ratio = (config.t_end / config.t_start) if steps > 1 else 1.0
    for step in range(steps):
        t = config.t_start * ratio ** (step / max(1, steps - 1))
        move = int(rng.choice(3, p=w))
        h = _propose(g, move, rng)
        if h is None:
            continue
        if move != 1 and not is_planar(h):
            continue
        c = _census(h, k)
        s = score(c, h)
        if s >= cur or rng.random() < math.exp((s - cur) / t):
            g, cur, cur_c = h, s, c
            key = (c, -h.num_edges)
            if key > best[:2]:
                best = (c, -h.num_edges, graph6_encode(h), h)
    return best[0], best[1], best[2], index


def anneal_max(config: SearchConfig) -> ExtremalRecord:
    """Best planar graph found over ``config.restarts`` annealing runs.

    Each restart draws from its own generator spawned from ``config.seed``,
    so results do not depend on ``config.workers``.
    """
    seqs = np.random.SeedSequence(config.seed).spawn(config.restarts)
    jobs = [(config, s, i) for i, s in enumerate(seqs)]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_one_restart, *zip(*jobs)))
    else:
        results = [_one_restart(*j) for j in jobs]
    per_restart = [r[0] for r in results]
    c, neg_e, code, index = max(results, key=lambda r: (r[0], r[1], tuple(-b for b in r[2]), -r[3]))
    witness = graph6_decode(code)
    if not is_planar(witness) or _census(witness, config.k) != c:
        raise SearchError("annealing witness failed re-verification")
    return ExtremalRecord(
        config.n, config.k, c, -neg_e, code.decode(), "annealing", False,
        {"config": config.to_dict(), "best_restart": index, "per_restart": per_restart},
    )
