import itertools
import random

import pytest
from hypothesis import given, settings

from synmon import (
    NotCommutativeError,
    ShuffleTerm,
    complement,
    decompose_commutative,
    ep_divide,
    equivalent,
    from_epset,
    intersect,
    lattice_closure,
    left_quotient,
    minimize,
    right_quotient,
    satisfies,
    syntactic_monoid,
    to_epset,
    union,
)
from synmon.errors import AlphabetMismatch, CapExceeded
from synmon.reproduce import (
    DISPLAYED_INTERSECTIONS,
    QUOTIENT_FINALS,
    TAIL_CYCLE,
    listed_family_6_2,
    random_commutative,
    shifted_family_member,
    upset_condition,
)

from conftest import dfas, epsets, unary


def naive_closure(gens, ops=("union", "intersect", "left_quotient", "right_quotient"), limit=400):
    """Fixpoint on canonical DFAs, no shared stamp."""
    alphabet = gens[0].alphabet
    family = {minimize(d) for d in gens}
    family |= {minimize(unary("0").__class__(alphabet, (tuple(0 for _ in alphabet),), 0, frozenset())),
               minimize(unary("0").__class__(alphabet, (tuple(0 for _ in alphabet),), 0, frozenset({0})))}
    while True:
        new = set()
        for x in family:
            for a in alphabet:
                if "left_quotient" in ops:
                    new.add(left_quotient(a, x))
                if "right_quotient" in ops:
                    new.add(right_quotient(a, x))
            if "complement" in ops:
                new.add(complement(x))
            for y in family:
                if "union" in ops:
                    new.add(union(x, y))
                if "intersect" in ops:
                    new.add(intersect(x, y))
        if new <= family:
            return family
        family |= new
        if len(family) > limit:
            return None


def test_one_plus_a_family_has_four_members():
    fam = lattice_closure([unary("1 + a")])
    assert len(fam) == 4
    assert set(fam) == naive_closure([unary("1 + a")])
    assert set(fam) == {unary(t) for t in ["0", "a*", "1", "1 + a"]}


def test_chain_family():
    gen = unary("a + a^6 a*")
    fam = lattice_closure([gen])
    assert len(fam) == 19
    assert set(fam) == naive_closure([gen])
    listed = listed_family_6_2()
    assert len(listed) == 20 and len(set(listed)) == 19
    assert set(fam) == set(listed)
    # the duplicate in the list
    assert unary("a^0 a*") == unary("1 + a^1 a*")


def test_tail_cycle_family():
    d = unary(TAIL_CYCLE)
    fam = lattice_closure([d])
    assert len(fam) == 288

    def lang(F):
        return minimize(d.with_finals(F))

    predicted = {lang(F) for r in range(10) for F in itertools.combinations(range(9), r)
                 if upset_condition(F)}
    assert set(fam) == predicted
    members = set(fam)
    # closure is sound one step out
    for x in fam:
        assert left_quotient("a", x) in members
    rng = random.Random(7)
    for _ in range(200):
        x, y = rng.sample(fam.members, 2)
        assert union(x, y) in fam and intersect(x, y) in fam
    # not closed under complement: {a^n : n in L} for F = {0}
    assert complement(lang({0})) not in members


def test_tail_cycle_quotients_and_intersections():
    d = unary(TAIL_CYCLE)
    for j, F in QUOTIENT_FINALS.items():
        assert left_quotient("a" * j, d) == minimize(d.with_finals(F))
    for C, A, B in DISPLAYED_INTERSECTIONS:
        assert intersect(minimize(d.with_finals(A)), minimize(d.with_finals(B))) == minimize(d.with_finals(C))
    assert satisfies(syntactic_monoid(d).monoid, "x^2 = x^9")


def test_complement_op_gives_boolean_algebra():
    fam = lattice_closure([unary("1 + a")], ops=["lattice", "complement", "quotients"])
    assert len(fam) == 8
    assert all(complement(x) in fam for x in fam)


@settings(max_examples=12)
@given(dfas("ab", 3))
def test_closure_matches_naive(d):
    try:
        fam = lattice_closure([d], cap=400)
    except CapExceeded:
        return
    naive = naive_closure([d])
    if naive is not None:
        assert set(fam) == naive


def test_closure_errors():
    with pytest.raises(ValueError):
        lattice_closure([unary("a")], ops=["shuffle"])
    with pytest.raises(AlphabetMismatch):
        lattice_closure([unary("a"), unary("a").__class__(unary("a").alphabet.__class__("b"), ((0,),), 0,
                                                         frozenset())])
    with pytest.raises(CapExceeded):
        lattice_closure([unary(TAIL_CYCLE)], cap=10)


@given(epsets())
def test_shifted_family_algebra(e):
    # a^n(F + a^5 a*) is a left quotient target: a^-1 of it is a^(n-1)(...)
    F = {x for x in e.members(4)}
    for n in range(1, 4):
        assert left_quotient("a", shifted_family_member(n, F)) == shifted_family_member(n - 1, F)


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("gen", ["a + a^6 a*", TAIL_CYCLE])
def test_family_closed_under_division(gen, k):
    fam = lattice_closure([unary(gen)])
    members = set(fam)
    assert all(from_epset(ep_divide(to_epset(x), k)) in members for x in fam)


# decomposition --------------------------------------------------------------

def _check_terms(d, terms):
    total = unary("0").__class__(d.alphabet, (tuple(0 for _ in d.alphabet),), 0, frozenset())
    for t in terms:
        total = union(total, t.to_dfa())
    return equivalent(total, d)


@pytest.mark.parametrize("text", ["((a + b)(a + b))*", "a* + b*", "(b* a b* a)* b*", "(a + b)* a (a + b)*", "0", "1"])
def test_decompose_examples(text):
    from synmon import compile_regex

    d = compile_regex(text, "ab")
    terms = decompose_commutative(d)
    assert _check_terms(d, terms)
    for t in terms:
        assert isinstance(t, ShuffleTerm) and "⧢" in t.to_text()


def test_decompose_shape():
    from synmon import compile_regex

    terms = decompose_commutative(compile_regex("a* + b*", "ab"))
    comps = {(t.component("a").to_text("a"), t.component("b").to_text("b")) for t in terms}
    assert comps == {("a*", "1"), ("1", "bb*")}


def test_decompose_rejects_noncommutative():
    from synmon import compile_regex

    with pytest.raises(NotCommutativeError):
        decompose_commutative(compile_regex("ab", "ab"))


@settings(max_examples=15)
@given(dfas("ab", 3))
def test_decompose_random(d):
    if not syntactic_monoid(d).monoid.is_commutative():
        with pytest.raises(NotCommutativeError):
            decompose_commutative(d)
        return
    assert _check_terms(d, decompose_commutative(d))


def test_decompose_random_commutative():
    rng = random.Random(3)
    for _ in range(10):
        d = random_commutative(rng)
        assert _check_terms(d, decompose_commutative(d))
