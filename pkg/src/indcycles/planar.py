"""Planarity, rotation systems, faces and regions.

Planarity is decided block by block with the path-insertion algorithm of
Demoucron, Malgrange and Pertuiset: keep an embedded subgraph with known
faces, and repeatedly draw a path of some fragment into a face that holds
all of the fragment's attachment vertices. A fragment with no such face
certifies non-planarity. Quadratic, but the graphs here have at most a
few hundred vertices.

Rotation systems use the convention that the face traced after dart
``(u, v)`` continues with ``(v, succ_v(u))``, where ``succ_v`` is the next
entry after ``u`` in ``rotation[v]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, members

__all__ = [
    "PlanarityError",
    "NotPlanar",
    "Disconnected",
    "InvalidRotation",
    "NonSeparating",
    "Embedding",
    "Region",
    "is_planar",
    "embed",
    "faces_of",
    "rotation_from_faces",
    "region_split",
    "find_empty_k27",
    "rotation_to_text",
    "rotation_from_text",
    "canonical_face",
    "biconnected_blocks",
]


class PlanarityError(ValueError):
    pass


class NotPlanar(PlanarityError):
    pass


class Disconnected(PlanarityError):
    pass


class InvalidRotation(PlanarityError):
    pass


class NonSeparating(PlanarityError):
    pass


Rotation = Sequence[Sequence[int]]


# ---------------------------------------------------------------------------
# rotation systems and faces
# ---------------------------------------------------------------------------


def _successors(rotation: Rotation) -> list[dict[int, int]]:
    n = len(rotation)
    succ: list[dict[int, int]] = []
    for v, ring in enumerate(rotation):
        if len(set(ring)) != len(ring):
            raise InvalidRotation(f"rotation at {v} repeats a neighbour")
        for u in ring:
            if not 0 <= u < n or u == v:
                raise InvalidRotation(f"rotation at {v} names invalid neighbour {u}")
        succ.append({u: ring[(i + 1) % len(ring)] for i, u in enumerate(ring)})
    for v, ring in enumerate(rotation):
        for u in ring:
            if v not in succ[u]:
                raise InvalidRotation(f"{u} appears around {v} but not vice versa")
    return succ


def faces_of(rotation: Rotation) -> list[tuple[int, ...]]:
    """Trace every face of a rotation system.

    Each directed edge lies on exactly one returned walk. Faces are listed
    in order of their first dart ``(u, v)`` with ``u`` ascending and ``v``
    in rotation order.
    """
    succ = _successors(rotation)
    seen: set[tuple[int, int]] = set()
    faces = []
    for u, ring in enumerate(rotation):
        for v in ring:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, succ[b][a]
            faces.append(tuple(walk))
    return faces


def _components(n: int, adjacency: Sequence[Iterable[int]]) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y in adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def is_spherical(rotation: Rotation, faces: Sequence[Sequence[int]] | None = None) -> bool:
    """Euler's relation ``V - E + F = 2`` on every component with an edge."""
    if faces is None:
        faces = faces_of(rotation)
    n = len(rotation)
    comp_of = [0] * n
    comps = _components(n, rotation)
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    face_count = [0] * len(comps)
    for f in faces:
        face_count[comp_of[f[0]]] += 1
    for i, comp in enumerate(comps):
        edges = sum(len(rotation[v]) for v in comp) // 2
        if edges and len(comp) - edges + face_count[i] != 2:
            return False
    return True


def canonical_face(face: Sequence[int]) -> tuple[int, ...]:
    """Orientation- and rotation-free key of a cyclic vertex sequence."""
    seqs = []
    for seq in (tuple(face), tuple(reversed(face))):
        for i in range(len(seq)):
            seqs.append(seq[i:] + seq[:i])
    return min(seqs)


def _orient(faces: Sequence[Sequence[int]]) -> list[list[int]]:
    """Orient unoriented face cycles so every edge is used once each way."""
    faces = [list(f) for f in faces]
    by_edge: dict[frozenset, list[int]] = {}
    for i, f in enumerate(faces):
        for j in range(len(f)):
            by_edge.setdefault(frozenset((f[j], f[(j + 1) % len(f)])), []).append(i)
    for e, fs in by_edge.items():
        if len(fs) != 2:
            raise InvalidRotation(f"edge {sorted(e)} lies on {len(fs)} faces, expected 2")

    def darts(f):
        return {(f[j], f[(j + 1) % len(f)]) for j in range(len(f))}

    oriented = [False] * len(faces)
    for root in range(len(faces)):
        if oriented[root]:
            continue
        oriented[root] = True
        queue = deque([root])
        while queue:
            i = queue.popleft()
            d = darts(faces[i])
            for a, b in d:
                for j in by_edge[frozenset((a, b))]:
                    if j == i:
                        continue
                    if oriented[j]:
                        if (a, b) in darts(faces[j]):
                            raise InvalidRotation("face cycles cannot be oriented consistently")
                        continue
                    if (a, b) in darts(faces[j]):
                        faces[j].reverse()
                    oriented[j] = True
                    queue.append(j)
    return faces


def rotation_from_faces(n: int, faces: Sequence[Sequence[int]], oriented: bool = False) -> list[list[int]]:
    """Rotation system whose traced faces are exactly ``faces``.

    Faces may be given in either orientation unless ``oriented`` is set.
    Raises :class:`InvalidRotation` when the cycles do not glue into a
    surface in which every vertex sees one cyclic fan.
    """
    cycles = [list(f) for f in faces] if oriented else _orient(faces)
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for f in cycles:
        L = len(f)
        for j in range(L):
            x, v, y = f[j - 1], f[j], f[(j + 1) % L]
            if x in succ[v]:
                raise InvalidRotation(f"dart ({x}, {v}) used twice")
            succ[v][x] = y
    rotation = []
    for v in range(n):
        if not succ[v]:
            rotation.append([])
            continue
        start = min(succ[v])
        ring = [start]
        x = succ[v][start]
        while x != start:
            ring.append(x)
            x = succ[v][x]
        if len(ring) != len(succ[v]):
            raise InvalidRotation(f"faces around {v} do not form a single fan")
        rotation.append(ring)
    return rotation


def rotation_to_text(rotation: Rotation) -> str:
    return "".join(f"{v}: {' '.join(map(str, ring))}\n" for v, ring in enumerate(rotation))


def rotation_from_text(text: str) -> list[list[int]]:
    entries: dict[int, list[int]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise InvalidRotation(f"line {lineno}: expected 'v: n1 n2 ...'")
        entries[int(head)] = [int(t) for t in tail.split()]
    n = max(entries, default=-1) + 1
    return [entries.get(v, []) for v in range(n)]


@dataclass(frozen=True)
class Embedding:
    """A rotation system together with its traced faces."""

    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rotation(cls, rotation: Rotation) -> "Embedding":
        rot = tuple(tuple(r) for r in rotation)
        return cls(rot, tuple(faces_of(rot)))

    @property
    def n(self) -> int:
        return len(self.rotation)

    def is_spherical(self) -> bool:
        return is_spherical(self.rotation, self.faces)

    def matches(self, g: Graph) -> bool:
        """Whether every ``rotation[v]`` is a permutation of ``N(v)``."""
        return g.n == self.n and all(sorted(r) == g.neighbors(v) for v, r in enumerate(self.rotation))

    def face_of_dart(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, f in enumerate(self.faces):
            for j in range(len(f)):
                out[(f[j], f[(j + 1) % len(f)])] = i
        return out

    def to_text(self) -> str:
        return rotation_to_text(self.rotation)


# ---------------------------------------------------------------------------
# biconnected blocks
# ---------------------------------------------------------------------------


def biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge lists of the blocks of ``g`` (iterative Hopcroft-Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[tuple[int, int]]] = []
    timer = 0
    nbrs = [g.neighbors(v) for v in range(n)]
    for root in range(n):
        if disc[root] != -1 or not nbrs[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(nbrs[v]):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[v][i]
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == (parent, v):
                        break
                blocks.append(block)
    return blocks


# ---------------------------------------------------------------------------
# path insertion on a single block
# ---------------------------------------------------------------------------


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    order = [start]
    stack = [(start, iter(sorted(adj[start])))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w == parent[v]:
                continue
            if w in parent:
                cycle = [v]
                x = v
                while x != w:
                    x = parent[x]
                    cycle.append(x)
                return cycle
            parent[w] = v
            order.append(w)
            stack.append((w, iter(sorted(adj[w]))))
            break
        else:
            stack.pop()
    raise PlanarityError("block has no cycle")


def _embed_block(edges: list[tuple[int, int]]) -> list[list[int]] | None:
    """Oriented faces of a planar embedding of a 2-connected block, or None."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    nv = len(adj)
    if len(edges) > 3 * nv - 6:
        return None
    cycle = _find_cycle(adj)
    faces: list[list[int]] = [cycle, cycle[::-1]]
    in_h = set(cycle)
    h_edges = {frozenset((cycle[i], cycle[i - 1])) for i in range(len(cycle))}
    total = len(edges)
    while len(h_edges) < total:
        fragments = _fragments(adj, in_h, h_edges)
        face_sets = [set(f) for f in faces]
        choice = None
        for attach, path_ends, inner in fragments:
            fits = [i for i, fs in enumerate(face_sets) if attach <= fs]
            if not fits:
                return None
            if choice is None or len(fits) == 1:
                choice = (attach, path_ends, inner, fits[0])
                if len(fits) == 1:
                    break
        attach, path_ends, inner, fi = choice
        path = _fragment_path(adj, attach, inner) if inner else list(path_ends)
        face = faces[fi]
        a, b = path[0], path[-1]
        ia, ib = face.index(a), face.index(b)
        L = len(face)
        forward_ab = [face[(ia + t) % L] for t in range((ib - ia) % L + 1)]
        forward_ba = [face[(ib + t) % L] for t in range((ia - ib) % L + 1)]
        mid = path[1:-1]
        faces[fi] = forward_ab + mid[::-1]
        faces.append(forward_ba + mid)
        in_h.update(path)
        for i in range(len(path) - 1):
            h_edges.add(frozenset((path[i], path[i + 1])))
    return faces


def _fragments(adj, in_h, h_edges):
    """``(attachments, chord_endpoints, inner_vertices)`` for each fragment."""
    frags = []
    for u in sorted(in_h):
        for v in sorted(adj[u]):
            if u < v and v in in_h and frozenset((u, v)) not in h_edges:
                frags.append(({u, v}, (u, v), None))
    seen: set[int] = set()
    for s in sorted(adj):
        if s in in_h or s in seen:
            continue
        comp = {s}
        stack = [s]
        attach = set()
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in in_h:
                    attach.add(y)
                elif y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        frags.append((attach, None, comp))
    return frags


def _fragment_path(adj, attach, inner):
    """Path between two attachment vertices through a fragment's interior."""
    ends = sorted(attach)
    a = ends[0]
    prev = {}
    queue = deque()
    for y in sorted(adj[a]):
        if y in inner:
            prev[y] = a
            queue.append(y)
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in attach and y != a:
                path = [y, x]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return path[::-1]
            if y in inner and y not in prev:
                prev[y] = x
                queue.append(y)
    raise PlanarityError("fragment with a single attachment in a 2-connected block")


def _planar_rotation(g: Graph) -> list[list[int]] | None:
    rotation: list[list[int]] = [[] for _ in range(g.n)]
    for block in biconnected_blocks(g):
        if len(block) == 1:
            u, v = block[0]
            rotation[u].append(v)
            rotation[v].append(u)
            continue
        faces = _embed_block(block)
        if faces is None:
            return None
        verts = sorted({x for e in block for x in e})
        local = rotation_from_faces(g.n, faces, oriented=True)
        for v in verts:
            rotation[v].extend(local[v])
    return rotation


def is_planar(g: Graph) -> bool:
    if g.n <= 4:
        return True
    if g.num_edges > 3 * g.n - 6:
        return False
    return _planar_rotation(g) is not None


def embed(g: Graph) -> Embedding:
    """Some planar embedding of a connected planar graph."""
    if g.n == 0 or len(_components(g.n, [g.neighbors(v) for v in range(g.n)])) != 1:
        raise Disconnected("embed() needs a connected graph; embed components separately")
    rotation = _planar_rotation(g) if g.num_edges <= 3 * g.n - 6 or g.n <= 2 else None
    if rotation is None:
        raise NotPlanar("graph is not planar")
    return Embedding.from_rotation(rotation)


# ---------------------------------------------------------------------------
# regions bounded by cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Region:
    """One side of a separating cycle: its faces and strictly interior vertices."""

    faces: tuple[int, ...]
    interior: frozenset[int]


def region_split(e: Embedding, boundary_cycle: Sequence[int]) -> tuple[Region, Region]:
    """Split the faces of ``e`` along a cycle of the embedded graph.

    The first region is the side containing the face on dart
    ``(c0, c1)`` of the boundary. Raises :class:`NonSeparating` when the
    dual graph stays connected after cutting along the cycle.
    """
    cyc = list(boundary_cycle)
    L = len(cyc)
    if L < 3 or len(set(cyc)) != L:
        raise PlanarityError("boundary must be a simple cycle of length >= 3")
    nbr = [set(r) for r in e.rotation]
    for i in range(L):
        a, b = cyc[i], cyc[(i + 1) % L]
        if not (0 <= a < e.n) or b not in nbr[a]:
            raise PlanarityError(f"boundary edge {a}-{b} is not in the graph")
    cut = {frozenset((cyc[i], cyc[(i + 1) % L])) for i in range(L)}
    where = e.face_of_dart()
    parent = list(range(len(e.faces)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, b), fi in where.items():
        if a < b and frozenset((a, b)) not in cut:
            ra, rb = find(fi), find(where[(b, a)])
            if ra != rb:
                parent[ra] = rb
    roots = sorted({find(i) for i in range(len(e.faces))}, key=lambda r: r != find(where[(cyc[0], cyc[1])]))
    if len(roots) == 1:
        raise NonSeparating("cycle does not separate the embedding")
    if len(roots) > 2:
        raise NonSeparating("cycle splits the faces into more than two regions")
    on_cycle = set(cyc)
    regions = []
    for r in roots:
        fs = tuple(i for i in range(len(e.faces)) if find(i) == r)
        verts = {v for i in fs for v in e.faces[i]}
        regions.append(Region(fs, frozenset(verts - on_cycle)))
    return regions[0], regions[1]


def find_empty_k27(e: Embedding) -> tuple[tuple[int, int], tuple[int, ...]] | None:
    """An empty K_{2,7}: ``((p, q), (b1, ..., b7))`` or None.

    ``b1..b7`` are consecutive around ``p`` among the common neighbours of
    ``p`` and ``q``, and one side of the cycle ``p b1 q b7`` holds exactly
    ``b2..b6``.
    """
    nbr = [set(r) for r in e.rotation]
    for p in range(e.n):
        for q in range(p + 1, e.n):
            common = nbr[p] & nbr[q]
            if len(common) < 7:
                continue
            ring = [x for x in e.rotation[p] if x in common]
            t = len(ring)
            for i in range(t):
                window = tuple(ring[(i + s) % t] for s in range(7))
                try:
                    sides = region_split(e, (p, window[0], q, window[6]))
                except NonSeparating:
                    continue
                middle = frozenset(window[1:6])
                if any(side.interior == middle for side in sides):
                    return (p, q), window
    return None
