"""Closed-form counts and the face-type case analysis, in exact arithmetic.

Case totals are polynomials in ``n`` and the type-3 face sizes ``m``,
``m'``, ``m''`` with rational coefficients, held in :class:`Poly`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

__all__ = [
    "FormulaError",
    "Poly",
    "N",
    "M",
    "MP",
    "MPP",
    "fi_c4",
    "fi_c5",
    "lemma5",
    "recursion_step",
    "even_blowup_count",
    "FaceSpec",
    "CASES",
    "CaseEvaluation",
    "solve_case",
    "ArgmaxResult",
    "argmax_case",
    "eval_named",
    "NAMED",
]


class FormulaError(ValueError):
    pass


Number = Union[int, Fraction]
VARS = ("n", "m", "mp", "mpp")
_PRETTY = {"n": "n", "m": "m", "mp": "m'", "mpp": "m''"}


class Poly:
    """Sparse polynomial in ``n, m, mp, mpp`` over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Number] | None = None):
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[mono] = self.terms.get(mono, Fraction(0)) + c
                if not self.terms[mono]:
                    del self.terms[mono]

    @classmethod
    def const(cls, c: Number) -> Poly:
        return cls({(0,) * len(VARS): c})

    @classmethod
    def var(cls, name: str) -> Poly:
        return cls({tuple(int(v == name) for v in VARS): 1})

    @staticmethod
    def lift(x) -> Poly:
        return x if isinstance(x, Poly) else Poly.const(x)

    def __add__(self, other) -> Poly:
        other = Poly.lift(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        return self + -Poly.lift(other)

    def __rsub__(self, other) -> Poly:
        return Poly.lift(other) - self

    def __mul__(self, other) -> Poly:
        other = Poly.lift(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, d: Number) -> Poly:
        d = Fraction(d)
        return Poly({k: c / d for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return (self - Poly.lift(other)).terms == {}

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def variables(self) -> set[str]:
        return {VARS[i] for mono in self.terms for i, e in enumerate(mono) if e}

    def subs(self, **values: Number) -> Poly:
        out = Poly()
        for mono, c in self.terms.items():
            term = Poly.const(c)
            rest = [0] * len(VARS)
            for i, e in enumerate(mono):
                if VARS[i] in values:
                    term = term * Fraction(values[VARS[i]]) ** e
                else:
                    rest[i] = e
            out = out + term * Poly({tuple(rest): 1})
        return out

    def __call__(self, **values: Number) -> Fraction:
        missing = self.variables() - values.keys()
        if missing:
            raise FormulaError(f"unbound variables {sorted(missing)}")
        point = [Fraction(values.get(v, 0)) for v in VARS]
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for x, e in zip(point, mono):
                if e:
                    term *= x ** e
            total += term
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            factors = [
                _PRETTY[VARS[i]] + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono) if e
            ]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


N = Poly.var("n")
M = Poly.var("m")
MP = Poly.var("mp")
MPP = Poly.var("mpp")


# ---------------------------------------------------------------------------
# named closed forms
# ---------------------------------------------------------------------------


def _check_int(name: str, value, lo: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormulaError(f"{name} must be an integer, got {value!r}")
    if value < lo:
        raise FormulaError(f"{name} must be at least {lo}, got {value}")
    return value


def fi_c4(n: int) -> Fraction:
    _check_int("n", n, 4)
    return Fraction(n * n - 5 * n + 6, 2)


def fi_c5(n: int) -> Fraction:
    _check_int("n", n, 5)
    return Fraction(n * n - 8 * n + (22 if n % 3 == 1 else 21), 3)


def lemma5(A: int, B: int, C: int) -> int:
    for name, v in (("|A|", A), ("|B|", B), ("|C|", C)):
        _check_int(name, v, 1)
    return A * B + A * C + B * C + 5 * (A + B) + 2 * C + 11


def recursion_step(n: int) -> int:
    _check_int("n", n, 2)
    return 2 * (n - 1) // 3 - 2


def even_blowup_count(n: int, k: int) -> Fraction:
    """Induced 2k-cycles in the balanced blow-up of C_2k, for k dividing n."""
    _check_int("k", k, 3)
    _check_int("n", n, 2 * k)
    if n % k:
        raise FormulaError(f"k={k} does not divide n={n}")
    return Fraction(n // k - 1) ** k


NAMED = {
    "fi_c4": fi_c4,
    "fi_c5": fi_c5,
    "lemma5": lemma5,
    "recursion_step": recursion_step,
    "even_blowup": even_blowup_count,
}


def eval_named(formula_id: str, *args: int) -> int:
    """Evaluate a named closed form; non-integral results raise."""
    try:
        fn = NAMED[formula_id]
    except KeyError:
        raise FormulaError(f"unknown formula {formula_id!r}; known: {', '.join(NAMED)}") from None
    try:
        value = Fraction(fn(*args))
    except TypeError as exc:
        raise FormulaError(f"bad arguments for {formula_id}: {exc}") from None
    if value.denominator != 1:
        raise FormulaError(f"{formula_id}{args} = {value} is not an integer")
    return int(value)


# ---------------------------------------------------------------------------
# face-type cases
# ---------------------------------------------------------------------------

# a face is 1, 2, or (3, size) with size a Poly (symbolic) or an int
FaceSpec = Union[int, tuple[int, Union[int, str]]]

CASES: dict[int, tuple[FaceSpec, FaceSpec, FaceSpec]] = {
    1: (1, 1, 1),
    2: (2, 1, 1),
    3: (2, 2, 1),
    4: (2, 2, 2),
    5: ((3, "m"), 1, 1),
    6: ((3, "m"), 2, 1),
    7: ((3, "m"), 2, 2),
    8: ((3, "m"), (3, "mp"), 1),
    9: ((3, "m"), (3, "mp"), 2),
    10: ((3, "m"), (3, "mp"), (3, "mpp")),
}

# face i lies between classes (i, i+1) and faces class i+2, with A, B, C = 0, 1, 2
_ADJACENT = ((0, 1), (1, 2), (2, 0))
_OPPOSITE = (2, 0, 1)


def _size(face: FaceSpec):
    if face in (1, 2):
        return None
    kind, m = face
    if kind != 3:
        raise FormulaError(f"invalid face type {face!r}")
    if isinstance(m, str):
        if m not in VARS[1:]:
            raise FormulaError(f"unknown size symbol {m!r}")
        return Poly.var(m)
    if not isinstance(m, int) or m < 3:
        raise FormulaError(f"type 3 faces need an integer size >= 3, got {m!r}")
    return Poly.const(m)


def _pair_count(f: FaceSpec, g: FaceSpec) -> Poly:
    """Gadget cycles meeting the Z-vertices of two faces sharing a corner."""
    sf, sg = _size(f), _size(g)
    if f == 1 or g == 1:
        return Poly()
    if f == 2 and g == 2:
        return Poly.const(1)
    if f == 2:
        return sg
    if g == 2:
        return sf
    return sf + sg - 1


@dataclass(frozen=True)
class CaseEvaluation:
    """One assignment of face types to F1, F2, F3, solved.

    ``K`` holds ``n/3 - |A|``, ``n/3 - |B|``, ``n/3 - |C|``; ``k`` the
    per-vertex counts through Z; ``z_cycles`` the cycles avoiding
    ``A, B, C`` when no type-3 face has four vertices. Each four-vertex
    type-3 face (with both optional edges) adds one further cycle; see
    :meth:`m4_bonus`.
    """

    case_id: int | None
    types: tuple[FaceSpec, FaceSpec, FaceSpec]
    k: tuple[Poly, Poly, Poly]
    K: tuple[Poly, Poly, Poly]
    z_cycles: Poly
    total: Poly

    def sizes(self) -> tuple[Poly, Poly, Poly]:
        return tuple(N / 3 - K for K in self.K)

    def size_symbols(self) -> list[str]:
        return [f[1] for f in self.types if f not in (1, 2) and isinstance(f[1], str)]

    def m4_bonus(self, **params: int) -> int:
        bonus = 0
        for f in self.types:
            if f in (1, 2):
                continue
            m = f[1]
            value = params[m] if isinstance(m, str) else m
            bonus += value == 4
        return bonus

    def total_at(self, n: int, **params: int) -> Fraction:
        return self.total(n=n, **params) + self.m4_bonus(**params)

    def sizes_at(self, n: int, **params: int) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(s(n=n, **params) for s in self.sizes())

    def type_label(self) -> str:
        out = []
        for f in self.types:
            if f in (1, 2):
                out.append(str(f))
            else:
                out.append(f"3({_PRETTY.get(f[1], f[1])})")
        return ",".join(out)


def solve_case(types: Sequence[FaceSpec], case_id: int | None = None) -> CaseEvaluation:
    """Solve the three per-vertex equations for a face-type assignment.

    Each class vertex lies in ``(2n-8)/3`` induced 5-cycles; ``a`` meets
    ``|B| + |C|`` of them outside Z, which gives ``K2 + K3 = k1 + 8/3``
    and its cyclic shifts.
    """
    types = tuple(types)
    if len(types) != 3:
        raise FormulaError("need exactly three face types")
    k = [Poly(), Poly(), Poly()]
    z = Poly()
    for i, f in enumerate(types):
        s = _size(f)
        if f == 1:
            continue
        opp = _OPPOSITE[i]
        k[opp] = k[opp] + 2
        if f != 2:
            for cls in _ADJACENT[i]:
                k[cls] = k[cls] + s - 1
            z = z + 1
    for i in range(3):
        z = z + _pair_count(types[i], types[(i + 1) % 3])
    third = Fraction(4, 3)
    K = tuple((k[(i + 1) % 3] + k[(i + 2) % 3] - k[i]) / 2 + third for i in range(3))
    sizes = [N / 3 - Ki for Ki in K]
    total = sizes[0] * sizes[1] + sizes[0] * sizes[2] + sizes[1] * sizes[2]
    total = total + sum((s * ki for s, ki in zip(sizes, k)), Poly()) + z
    return CaseEvaluation(case_id, types, tuple(k), K, z, total)


def case(case_id: int) -> CaseEvaluation:
    try:
        return solve_case(CASES[case_id], case_id)
    except KeyError:
        raise FormulaError(f"no case {case_id}; cases are {min(CASES)}..{max(CASES)}") from None


@dataclass(frozen=True)
class ArgmaxResult:
    n: int
    case_id: int
    params: dict[str, int]
    total: Fraction
    ties: tuple[tuple[int, tuple[tuple[str, int], ...]], ...]


def argmax_case(n: int, max_m: int = 12) -> ArgmaxResult:
    """Best case over all type-3 sizes in ``3..max_m``, m = 4 bonuses included."""
    _check_int("n", n, 19)
    _check_int("max_m", max_m, 3)
    best = None
    ties: list[tuple[int, tuple[tuple[str, int], ...]]] = []
    for cid in CASES:
        ev = case(cid)
        symbols = ev.size_symbols()
        for values in itertools.product(range(3, max_m + 1), repeat=len(symbols)):
            params = dict(zip(symbols, values))
            t = ev.total_at(n, **params)
            key = (cid, tuple(sorted(params.items())))
            if best is None or t > best[0]:
                best = (t, cid, params)
                ties = [key]
            elif t == best[0]:
                ties.append(key)
    t, cid, params = best
    return ArgmaxResult(n, cid, params, t, tuple(ties))
