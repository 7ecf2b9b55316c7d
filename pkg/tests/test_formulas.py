from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from indcycles import formulas as F
from indcycles.formulas import CASES, FormulaError, Poly, argmax_case, case, eval_named, solve_case

SYM = {name: sp.Symbol(name) for name in F.VARS}


def _to_sympy(p: Poly):
    return sp.Add(*[sp.Rational(c.numerator, c.denominator) * sp.Mul(*[SYM[v] ** e for v, e in zip(F.VARS, mono)])
                    for mono, c in p.terms.items()])


polys = st.builds(
    lambda terms: Poly({mono: Fraction(a, b) for mono, a, b in terms}),
    st.lists(
        st.tuples(st.tuples(*[st.integers(0, 2)] * 4), st.integers(-5, 5), st.integers(1, 4)),
        max_size=5,
    ),
)


@given(polys, polys)
def test_poly_arithmetic_matches_sympy(p, q):
    P, Q = _to_sympy(p), _to_sympy(q)
    assert sp.expand(_to_sympy(p + q) - (P + Q)) == 0
    assert sp.expand(_to_sympy(p * q) - P * Q) == 0
    assert sp.expand(_to_sympy(p - q) - (P - Q)) == 0
    assert sp.expand(_to_sympy(p / 3) - P / 3) == 0


@given(polys, st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
def test_poly_evaluation(p, n, m, mp, mpp):
    want = _to_sympy(p).subs({SYM["n"]: n, SYM["m"]: m, SYM["mp"]: mp, SYM["mpp"]: mpp})
    assert p(n=n, m=m, mp=mp, mpp=mpp) == Fraction(str(want))
    assert p.subs(n=n)(m=m, mp=mp, mpp=mpp) == p(n=n, m=m, mp=mp, mpp=mpp)


def test_poly_unbound_variable():
    with pytest.raises(FormulaError):
        (F.N + F.M)(n=3)


def test_repr():
    assert repr(F.N * F.N - 8 * F.N + 21) == "n^2 - 8*n + 21"
    assert repr(Poly()) == "0"


@pytest.mark.parametrize("n,want", [(4, 1), (5, 3), (10, 28)])
def test_fi_c4(n, want):
    assert eval_named("fi_c4", n) == want  # [DERIVED] C(n-2, 2)


@pytest.mark.parametrize("n,want", [(10, 14), (19, 77), (20, 87), (21, 98), (22, 110)])
def test_fi_c5_values(n, want):
    assert eval_named("fi_c5", n) == want


def test_fi_c5_integral_everywhere():
    for n in range(5, 400):
        assert F.fi_c5(n).denominator == 1


def test_lemma5_matches_fi_c5_at_balanced_sizes():
    assert F.lemma5(4, 4, 1) == 77
    assert F.lemma5(5, 4, 1) == F.lemma5(4, 4, 2) == 87


def test_even_blowup():
    assert eval_named("even_blowup", 12, 3) == 27
    with pytest.raises(FormulaError):
        eval_named("even_blowup", 13, 3)


@pytest.mark.parametrize("args", [("fi_c5", 4), ("fi_c4", 3.5), ("nope", 3), ("lemma5", 1, 0, 1), ("fi_c5",)])
def test_eval_named_errors(args):
    with pytest.raises(FormulaError):
        eval_named(*args)


@pytest.mark.parametrize("cid", sorted(CASES))
def test_case_solution_matches_linear_system(cid):
    """Solve |B|+|C|+k_A = (2n-8)/3 and its shifts with sympy and compare."""
    ev = case(cid)
    n = SYM["n"]
    A, B, C = sp.symbols("A B C")
    kA, kB, kC = (_to_sympy(x) for x in ev.k)
    target = (2 * n - 8) / 3
    sol = sp.solve([B + C + kA - target, A + C + kB - target, A + B + kC - target], [A, B, C], dict=True)[0]
    for got, sym in zip(ev.sizes(), (A, B, C)):
        assert sp.simplify(_to_sympy(got) - sol[sym]) == 0
    total = sol[A] * sol[B] + sol[A] * sol[C] + sol[B] * sol[C] + sol[A] * kA + sol[B] * kB + sol[C] * kC
    total += _to_sympy(ev.z_cycles)
    assert sp.expand(_to_sympy(ev.total) - total) == 0


def test_solve_case_accepts_concrete_sizes():
    ev = solve_case([(3, 4), 2, 2])
    assert ev.total.variables() == {"n"}
    assert ev.m4_bonus() == 1
    assert ev.total_at(19) == 77


def test_case_errors():
    with pytest.raises(FormulaError):
        case(11)
    with pytest.raises(FormulaError):
        solve_case([1, 1])


def test_argmax_reports_ties():
    r = argmax_case(25, max_m=6)
    assert r.case_id == 7 and r.params == {"m": 4}
    assert r.total == F.fi_c5(25)
    assert len(r.ties) == 1
