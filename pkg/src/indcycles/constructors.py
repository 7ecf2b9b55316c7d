"""Named graph families with vertex names and rotation systems.

Every constructor returns a :class:`Construction`: the graph, a map from
vertex names (``"u1"``, ``"a3"``, ``"z5"``, ...) to labels, and, where the
family has a canonical drawing, the rotation system of that drawing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence, Union

from .graph import Graph, build
from .planar import rotation_from_faces

__all__ = [
    "ConstructionError",
    "Construction",
    "RequiredFormSpec",
    "BlowupSpec",
    "FaceType",
    "parse_face_type",
    "make_k2m",
    "make_required_form",
    "required_form_faces",
    "make_even_blowup",
    "make_odd_blowup",
    "make_face_gadget",
    "make_h_minus_z",
    "make_case_graph",
    "FACE_CORNERS",
]


class ConstructionError(ValueError):
    pass


class Construction(NamedTuple):
    graph: Graph
    names: dict[str, int]
    rotation: list[list[int]] | None = None

    def label(self, name: str) -> int:
        return self.names[name]

    def labels(self, names: Sequence[str]) -> list[int]:
        return [self.names[x] for x in names]

    def name_of(self) -> dict[int, str]:
        return {v: k for k, v in self.names.items()}


class _Builder:
    def __init__(self):
        self.names: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []

    def add(self, *names: str) -> None:
        for name in names:
            if name in self.names:
                raise ConstructionError(f"duplicate vertex name {name}")
            self.names[name] = len(self.names)

    def join(self, a: str, b: str) -> None:
        self.edges.append((self.names[a], self.names[b]))

    def finish(self, faces: list[list[str]] | None = None) -> Construction:
        g = build(len(self.names), self.edges)
        rotation = None
        if faces is not None:
            rotation = rotation_from_faces(g.n, [[self.names[x] for x in f] for f in faces])
        return Construction(g, dict(self.names), rotation)


# ---------------------------------------------------------------------------
# K_{2,n-2}
# ---------------------------------------------------------------------------


def make_k2m(n: int) -> Construction:
    """K_{2,n-2} with the two-vertex side labelled 0 and 1."""
    if n < 4:
        raise ConstructionError("K_{2,n-2} needs n >= 4")
    b = _Builder()
    b.add("s1", "s2")
    leaves = [f"t{i}" for i in range(1, n - 1)]
    b.add(*leaves)
    for t in leaves:
        b.join("s1", t)
        b.join("s2", t)
    m = len(leaves)
    faces = [["s1", leaves[i], "s2", leaves[(i + 1) % m]] for i in range(m)]
    return b.finish(faces)


# ---------------------------------------------------------------------------
# graphs of the required form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RequiredFormSpec:
    """Parameters of a graph of the required form.

    ``size_option`` picks between the two admissible class-size triples
    when ``n % 3 != 1`` (default ``"first"``). ``optional_edges`` is a
    bitmask over :meth:`optional_edge_names`.
    """

    n: int
    size_option: str | None = None
    optional_edges: int = 0

    def __post_init__(self):
        if self.n < 19:
            raise ConstructionError("the required form needs n >= 19")
        if self.n % 3 == 1 and self.size_option is not None:
            raise ConstructionError("n = 1 (mod 3) has a single size option")
        if self.size_option not in (None, "first", "second"):
            raise ConstructionError(f"unknown size option {self.size_option!r}")
        if not 0 <= self.optional_edges < 1 << len(self.optional_edge_names()):
            raise ConstructionError("optional edge mask out of range")

    def class_sizes(self) -> tuple[int, int, int]:
        n, r = self.n, self.n % 3
        second = self.size_option == "second"
        if r == 1:
            return (n - 7) // 3, (n - 7) // 3, (n - 16) // 3
        if r == 2:
            return ((n - 8) // 3, (n - 8) // 3, (n - 14) // 3) if second else ((n - 5) // 3, (n - 8) // 3, (n - 17) // 3)
        return (n // 3 - 2, n // 3 - 2, n // 3 - 6) if second else (n // 3 - 2, n // 3 - 3, n // 3 - 5)

    def optional_edge_names(self) -> list[tuple[str, str]]:
        A, B, C = self.class_sizes()
        out = [
            (f"a{A}", "z2"),
            ("z4", "b1"),
            (f"b{B}", "z5"),
            ("z5", "c1"),
            (f"c{C}", "z6"),
            ("z6", "a1"),
        ]
        out += [(f"a{i}", f"a{i + 1}") for i in range(1, A)]
        out += [(f"b{i}", f"b{i + 1}") for i in range(1, B)]
        out += [(f"c{i}", f"c{i + 1}") for i in range(1, C)]
        return out

    def full_mask(self) -> int:
        return (1 << len(self.optional_edge_names())) - 1


_REQUIRED_EDGES = [
    ("u1", "u2"), ("u1", "u3"), ("u2", "u3"), ("u1", "z1"), ("u2", "z1"),
    ("u1", "z2"), ("u2", "z4"), ("z1", "z2"), ("z1", "z3"), ("z1", "z4"),
    ("z2", "z3"), ("z3", "z4"), ("z2", "w"), ("z3", "w"), ("z4", "w"),
    ("u2", "z5"), ("u3", "z5"), ("z5", "w"), ("u1", "z6"), ("u3", "z6"),
    ("z6", "w"),
]


def required_form_faces(A: int, B: int, C: int) -> list[list[str]]:
    """Face boundaries of the canonical drawing of the principal graph."""
    faces = [["u1", "u2", "u3"]]
    faces += [["u1", f"a{i}", "w", f"a{i + 1}"] for i in range(1, A)]
    faces += [["u2", f"b{i}", "w", f"b{i + 1}"] for i in range(1, B)]
    faces += [["u3", f"c{i}", "w", f"c{i + 1}"] for i in range(1, C)]
    faces += [
        ["u1", f"a{A}", "w", "z2"],
        ["u1", "z1", "z2"],
        ["z1", "z2", "z3"],
        ["z2", "z3", "w"],
        ["u1", "u2", "z1"],
        ["u2", "z1", "z4"],
        ["z1", "z3", "z4"],
        ["z3", "z4", "w"],
        ["u2", "z4", "w", "b1"],
        ["u2", f"b{B}", "w", "z5"],
        ["u3", "z5", "w", "c1"],
        ["u2", "u3", "z5"],
        ["u3", f"c{C}", "w", "z6"],
        ["u1", "z6", "w", "a1"],
        ["u1", "u3", "z6"],
    ]
    return faces


def make_required_form(spec: RequiredFormSpec | int) -> Construction:
    """Graph of the required form, labelled u1, u2, u3, w, A, B, C, z1..z6.

    With no optional edges the rotation traces the canonical face list;
    each optional edge is drawn as the chord of the quadrilateral face
    whose two non-hub corners it joins.
    """
    if isinstance(spec, int):
        spec = RequiredFormSpec(spec)
    A, B, C = spec.class_sizes()
    b = _Builder()
    b.add("u1", "u2", "u3", "w")
    b.add(*(f"a{i}" for i in range(1, A + 1)))
    b.add(*(f"b{i}" for i in range(1, B + 1)))
    b.add(*(f"c{i}" for i in range(1, C + 1)))
    b.add(*(f"z{i}" for i in range(1, 7)))
    for x, y in _REQUIRED_EDGES:
        b.join(x, y)
    for hub, cls, size in (("u1", "a", A), ("u2", "b", B), ("u3", "c", C)):
        for i in range(1, size + 1):
            b.join(hub, f"{cls}{i}")
            b.join("w", f"{cls}{i}")
    faces = required_form_faces(A, B, C)
    for bit, (x, y) in enumerate(spec.optional_edge_names()):
        if not spec.optional_edges >> bit & 1:
            continue
        b.join(x, y)
        faces = _split_quadrilateral(faces, x, y)
    return b.finish(faces)


def _split_quadrilateral(faces: list[list[str]], x: str, y: str) -> list[list[str]]:
    for i, f in enumerate(faces):
        if len(f) == 4 and x in f and y in f:
            ix, iy = f.index(x), f.index(y)
            if (ix - iy) % 4 == 2:
                p, q = f[(ix + 1) % 4], f[(ix + 3) % 4]
                return faces[:i] + [[x, p, y], [x, y, q]] + faces[i + 1:]
    raise ConstructionError(f"no quadrilateral face has {x} and {y} as opposite corners")


# ---------------------------------------------------------------------------
# blow-ups of cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlowupSpec:
    """A cycle of length ``cycle_length`` with every second vertex blown up.

    Even cycles ``C_{2k}`` blow up the ``k`` even positions; odd cycles
    ``C_{2k+1}`` blow up positions ``1, 3, ..., 2k-1``. The remaining
    vertices are shared as evenly as possible, earlier positions first.
    """

    cycle_length: int
    n: int
    class_sizes: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        L = self.cycle_length
        k = L // 2
        fixed = L - k
        if k < 1 or (L % 2 == 0 and k < 3) or L < 3:
            raise ConstructionError(f"invalid cycle length {L}")
        if self.n < L:
            raise ConstructionError(f"n={self.n} is smaller than the cycle length {L}")
        q, r = divmod(self.n - fixed, k)
        object.__setattr__(self, "class_sizes", tuple(q + 1 if j < r else q for j in range(k)))

    @property
    def blown_positions(self) -> list[int]:
        k = self.cycle_length // 2
        return [2 * j for j in range(k)] if self.cycle_length % 2 == 0 else [2 * j + 1 for j in range(k)]


def _blowup(spec: BlowupSpec, with_paths: bool) -> Construction:
    L = spec.cycle_length
    blown = dict(zip(spec.blown_positions, spec.class_sizes))
    b = _Builder()
    slots: list[list[str]] = []
    for p in range(L):
        if p in blown:
            names = [f"v{p}_{i}" for i in range(1, blown[p] + 1)]
        else:
            names = [f"v{p}"]
        b.add(*names)
        slots.append(names)
    for p in range(L):
        for x in slots[p]:
            for y in slots[(p + 1) % L]:
                b.join(x, y)
        if with_paths and p in blown:
            for x, y in zip(slots[p], slots[p][1:]):
                b.join(x, y)
    return b.finish()


def make_even_blowup(k: int, n: int) -> Construction:
    """C_{2k} with each of its k even positions replaced by an independent set."""
    if k < 3:
        raise ConstructionError("even blow-ups need k >= 3")
    return _blowup(BlowupSpec(2 * k, n), with_paths=False)


def make_odd_blowup(k: int, n: int, with_paths: bool = False) -> Construction:
    """C_{2k+1} with k pairwise non-adjacent positions blown up.

    ``with_paths`` threads a path through each blown class.
    """
    if k < 1:
        raise ConstructionError("odd blow-ups need k >= 1")
    return _blowup(BlowupSpec(2 * k + 1, n), with_paths)


# ---------------------------------------------------------------------------
# faces of H - Z and their gadgets
# ---------------------------------------------------------------------------

FaceType = Union[int, tuple[int, int]]

# corners (first, second) of the three big faces of H - Z
FACE_CORNERS = (("u1", "u2"), ("u2", "u3"), ("u3", "u1"))


def parse_face_type(t) -> tuple[int, int]:
    """Normalise a face type to ``(kind, m)``; accepts 1, 2, (3, m) or "3:m"."""
    if isinstance(t, str):
        head, _, tail = t.partition(":")
        t = (int(head), int(tail)) if tail else int(head)
    if isinstance(t, int):
        if t in (1, 2):
            return t, 0
        raise ConstructionError("type 3 faces need a size, e.g. (3, 4)")
    kind, m = t
    if kind in (1, 2) and m == 0:
        return kind, 0
    if kind != 3:
        raise ConstructionError(f"unknown face type {t!r}")
    if m < 3:
        raise ConstructionError("a type 3 face needs m >= 3 vertices")
    return 3, m


def _default_mask(m: int) -> int:
    # m = 3: optional edge absent; m = 4: both present (the richer choices)
    return 0b11 if m == 4 else 0


def _add_gadget(b: _Builder, types, masks) -> None:
    if len(types) != 3:
        raise ConstructionError("need one type per face F1, F2, F3")
    masks = list(masks) if masks is not None else [None, None, None]
    for f, (t, (first, second)) in enumerate(zip(types, FACE_CORNERS), 1):
        kind, m = parse_face_type(t)
        if kind == 1:
            continue
        if kind == 2:
            z = f"F{f}.z"
            b.add(z)
            b.join(z, first)
            b.join(z, second)
            b.join(z, "w")
            continue
        zs = [f"F{f}.z{i}" for i in range(1, m + 1)]
        b.add(*zs)
        b.join(zs[0], first)
        b.join(zs[0], second)
        b.join(zs[1], first)
        b.join(zs[m - 1], second)
        for z in zs[1:]:
            b.join(zs[0], z)
            b.join(z, "w")
        mask = masks[f - 1]
        if mask is None:
            mask = _default_mask(m)
        if not 0 <= mask < 1 << (m - 2):
            raise ConstructionError(f"optional edge mask {mask} out of range for m={m}")
        for i in range(m - 2):
            if mask >> i & 1:
                b.join(zs[i + 1], zs[i + 2])


def make_face_gadget(types: Sequence[FaceType], masks: Sequence[int | None] | None = None) -> Construction:
    """``H[{u1, u2, u3, w} + Z]`` for a type assignment to faces F1, F2, F3.

    F1, F2, F3 have corners (u1, u2), (u2, u3), (u3, u1). A type 3 face
    with m vertices has ``z1`` on both corners, ``z2`` on the first,
    ``zm`` on the second, and ``z2..zm`` joined to ``z1`` and ``w``; bit
    ``i`` of its mask adds the optional edge ``z(i+2) z(i+3)``. Unset
    masks default to no optional edge for m = 3 and both for m = 4.
    """
    b = _Builder()
    b.add("u1", "u2", "u3", "w")
    b.join("u1", "u2")
    b.join("u2", "u3")
    b.join("u1", "u3")
    _add_gadget(b, types, masks)
    return b.finish()


def _add_skeleton(b: _Builder, A: int, B: int, C: int) -> list[list[str]]:
    if min(A, B, C) < 1:
        raise ConstructionError("class sizes must be at least 1")
    b.add("u1", "u2", "u3", "w")
    b.join("u1", "u2")
    b.join("u2", "u3")
    b.join("u1", "u3")
    for hub, cls, size in (("u1", "a", A), ("u2", "b", B), ("u3", "c", C)):
        names = [f"{cls}{i}" for i in range(1, size + 1)]
        b.add(*names)
        for x in names:
            b.join(hub, x)
            b.join("w", x)
    faces = [["u1", "u2", "u3"]]
    faces += [["u1", f"a{i}", "w", f"a{i + 1}"] for i in range(1, A)]
    faces += [["u2", f"b{i}", "w", f"b{i + 1}"] for i in range(1, B)]
    faces += [["u3", f"c{i}", "w", f"c{i + 1}"] for i in range(1, C)]
    faces += [
        ["u1", f"a{A}", "w", "b1", "u2"],
        ["u2", f"b{B}", "w", "c1", "u3"],
        ["u3", f"c{C}", "w", "a1", "u1"],
    ]
    return faces


def make_h_minus_z(A: int, B: int, C: int) -> Construction:
    """Triangle u1 u2 u3 plus the complete bipartite graphs {u1,w}-A, {u2,w}-B, {u3,w}-C."""
    b = _Builder()
    faces = _add_skeleton(b, A, B, C)
    return b.finish(faces)


def make_case_graph(
    types: Sequence[FaceType],
    sizes: tuple[int, int, int],
    masks: Sequence[int | None] | None = None,
) -> Construction:
    """H - Z with class sizes ``sizes`` and the face gadget ``types`` added."""
    b = _Builder()
    _add_skeleton(b, *sizes)
    _add_gadget(b, types, masks)
    return b.finish()
