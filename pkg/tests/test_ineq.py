import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from synmon import (
    Finite,
    Inequality,
    OmegaPlus,
    OmegaTerm,
    check,
    enumerate_power_inequalities,
    eval_term,
    monoid_props,
    parse_inequality,
    parse_term,
    satisfies,
    stamp_satisfies,
    syntactic_monoid,
    transition_monoid,
    trivial_monoid,
)
from synmon.ineq import stamp_domain

from conftest import dfas, unary

ONE_PLUS_A = syntactic_monoid(unary("1 + a"))
CHAIN = syntactic_monoid(unary("a + a^6 a*"))
CYCLE = syntactic_monoid(unary("a + (a^3 + a^4)(a^7)*"))


def test_parse_terms():
    assert parse_term("x y^(w+1)") == OmegaTerm((("x", Finite(1)), ("y", OmegaPlus(1))))
    assert parse_term("x^w") == OmegaTerm((("x", OmegaPlus(0)),))
    assert parse_term("1") == OmegaTerm()
    assert parse_term("x^0 y") == OmegaTerm((("y", Finite(1)),))
    assert str(parse_inequality("x y^(w+1) <= x^w y")) == "xy^(w+1) <= x^wy"
    assert parse_inequality("xy = yx").relation == "="


@pytest.mark.parametrize("bad", ["x <> y", "x^ <= 1", "<= x", "x^(w-1) <= x"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_inequality(bad)


def test_exponent_validation():
    with pytest.raises(ValueError):
        Finite(0)
    with pytest.raises(ValueError):
        OmegaPlus(-1)
    with pytest.raises(ValueError):
        Inequality(OmegaTerm(), OmegaTerm(), "<")


def test_eval_examples():
    assert eval_term("x^w", CHAIN.monoid, {"x": 1}) == 6
    assert eval_term("1", CHAIN.monoid, {}) == CHAIN.monoid.identity
    m = CYCLE.monoid
    a = CYCLE.stamp.image("a")
    assert eval_term("x^(w+7)", m, {"x": a}) == eval_term("x^w", m, {"x": a}) == m.power(a, 7)
    with pytest.raises(KeyError):
        eval_term("xy", m, {"x": a})


def test_one_plus_a_inequalities():
    m = ONE_PLUS_A.monoid
    assert satisfies(m, "x <= 1") and satisfies(m, "x^2 <= x^3") and satisfies(m, "xy = yx")
    assert not any(satisfies(m, f"1 <= x^{q}") for q in range(1, 7))


def test_chain_inequalities():
    m = CHAIN.monoid
    assert all(satisfies(m, s) for s in ["xy = yx", "1 <= x^5", "x^2 <= x^3", "x^6 = x^7"])
    assert not satisfies(m, "1 <= x^4")


def test_counterexample_is_first_failure():
    v = check(CHAIN.monoid, "x <= x^2")
    assert not v.holds
    x = v.counterexample["x"]
    m = CHAIN.monoid
    assert not m.le(x, m.power(x, 2))
    assert check(CHAIN.monoid, "x^6 = x^7")  # truthy verdict


def test_too_many_variables():
    with pytest.raises(ValueError):
        check(trivial_monoid(), "xyzt = 1")


def test_power_inequalities():
    p0 = {q for p, q in enumerate_power_inequalities(CHAIN.monoid, 7) if p == 0}
    assert p0 == {0, 5, 6, 7}
    assert enumerate_power_inequalities(trivial_monoid(), 3) == set(itertools.product(range(4), repeat=2))
    got = enumerate_power_inequalities(ONE_PLUS_A.monoid, 3)
    expected = {(p, q) for p in range(4) for q in range(4) if not (p in (0, 1) and q > p)}
    assert got == expected
    with pytest.raises(ValueError):
        enumerate_power_inequalities(CHAIN.monoid, 0)


def test_power_inequalities_brute_force():
    m = CHAIN.monoid
    brute = {(p, q) for p in range(8) for q in range(8)
             if all(m.le(m.power(x, p), m.power(x, q)) for x in range(m.n))}
    assert enumerate_power_inequalities(m, 7) == brute


# stamps -------------------------------------------------------------------

def test_trivial_identity_holds_in_every_mode():
    for mode in ("monoid", "lp", "ld"):
        assert stamp_satisfies(CHAIN.stamp, "x = x", mode)


def test_lp_on_single_letter_image():
    # the only lp assignment is x -> a; x^5 is a^5 and 1 < a^5 holds
    m = CHAIN.monoid
    assert stamp_satisfies(CHAIN.stamp, "1 <= x^5", "lp")
    assert not m.le(1, 5)  # a <= a^5 fails, a different comparison


def test_lp_and_ld_differ():
    s = ONE_PLUS_A.stamp
    ineq = "x y^(w+1) <= x^w y"
    assert stamp_satisfies(s, ineq, "lp")
    assert not stamp_satisfies(s, ineq, "ld")
    assert not stamp_satisfies(s, ineq, "monoid")


def test_stamp_domain():
    s = ONE_PLUS_A.stamp
    assert stamp_domain(s, "lp") == [1]
    assert stamp_domain(s, "ld") == [0, 1]
    with pytest.raises(ValueError):
        stamp_domain(s, "xx")


INEQUALITIES = ["xy = yx", "x <= 1", "1 <= x", "x^2 <= x^3", "x^w = x^(w+1)", "x y^(w+1) <= x^w y",
                "x^w y x^w <= x^w", "xyx = yxy"]


@settings(max_examples=15)
@given(dfas("ab", 4))
def test_mode_monotonicity(d):
    s = syntactic_monoid(d).stamp
    for text in INEQUALITIES:
        mono = stamp_satisfies(s, text, "monoid")
        ld = stamp_satisfies(s, text, "ld")
        lp = stamp_satisfies(s, text, "lp")
        assert (not mono or ld) and (not ld or lp)


@given(dfas("ab", 4))
def test_aperiodicity_bridge(d):
    m = transition_monoid(d).monoid
    assert monoid_props(m).aperiodic == satisfies(m, "x^w = x^(w+1)")


@settings(max_examples=10)
@given(dfas("ab", 3))
def test_check_matches_naive_loop(d):
    m = syntactic_monoid(d).monoid
    for text in INEQUALITIES:
        ineq = parse_inequality(text)
        vs = ineq.variables()
        naive = True
        for values in itertools.product(range(m.n), repeat=len(vs)):
            env = dict(zip(vs, values))
            l, r = eval_term(ineq.lhs, m, env), eval_term(ineq.rhs, m, env)
            naive &= m.le(l, r) and (ineq.relation == "<=" or m.le(r, l))
        assert satisfies(m, ineq) == naive


@pytest.mark.parametrize("n", range(1, 9))
def test_divisibility_law(n):
    m = syntactic_monoid(unary(f"a(a^{n})*")).monoid
    for k in range(0, 9):
        assert satisfies(m, f"x <= x^{k + 1}") == (k % n == 0)


def test_omega_power_commutes():
    m = CYCLE.monoid
    om = m.omega
    for x in range(m.n):
        for k in range(2 * m.n + 1):
            assert eval_term(f"x^(w+{k})", m, {"x": x}) == m.mult[om[x], m.power(x, k)] \
                == m.mult[m.power(x, k), om[x]]
