import itertools

import pytest
from hypothesis import given, settings, strategies as st

from synmon import (
    NumericalSemigroup,
    build_LS,
    generate,
    satisfies,
    syntactic_monoid,
    to_epset,
    vs_characterization,
)
from synmon.numsemigroup import growth_inequality, satisfied_growth

gen_sets = st.frozensets(st.integers(0, 9), max_size=4)


def brute_members(S, upto):
    reach = {0}
    for n in range(1, upto + 1):
        if any(s and n - s in reach for s in S):
            reach.add(n)
    return sorted(reach)


def test_three_five():
    s = generate({3, 5})
    assert s.members(12) == [0, 3, 5, 6, 8, 9, 10, 11, 12]
    assert s.conductor == 8 and s.gcd == 1
    assert s.minimal_generators == {3, 5}
    assert build_LS({3, 5}).accepts("a") and build_LS({3, 5}).accepts("a" * 4)
    assert not build_LS({3, 5}).accepts("") and not build_LS({3, 5}).accepts("aa")


def test_empty_and_zero():
    for S in (set(), {0}):
        s = generate(S)
        assert s.members(5) == [0] and s.conductor is None
        assert [n for n in range(8) if build_LS(S).accepts("a" * n)] == [1]


def test_non_coprime():
    s = generate({4, 6})
    assert s.gcd == 2 and s.conductor is None
    assert s.members(14) == [0, 4, 6, 8, 10, 12, 14]
    assert 15 not in s and 1000 in s
    assert to_epset(build_LS({4, 6})).period == 2


def test_minimal_generators():
    assert generate({2, 3, 4, 5, 6}).minimal_generators == {2, 3}
    assert generate({3, 6, 9, 10}).minimal_generators == {3, 10}
    assert generate({0, 1}).minimal_generators == {1}
    assert generate({2, 4}) == generate({2}) and hash(generate({2, 4})) == hash(generate({2}))
    with pytest.raises(ValueError):
        generate({-1})


@given(gen_sets)
def test_membership_brute_force(S):
    assert generate(S).members(60) == brute_members(S, 60)


@given(gen_sets, gen_sets, gen_sets)
def test_submonoid(S, T, U):
    s = generate(S)
    members = s.members(30)
    assert all(a + b in s for a in members for b in members)
    assert generate(s.minimal_generators) == s


@given(gen_sets)
def test_language_matches_definition(S):
    d = build_LS(S)
    s = generate(S)
    assert [n for n in range(40) if d.accepts("a" * n)] == [n + 1 for n in range(39) if n in s]


def test_growth_inequality_text():
    assert str(growth_inequality(2)) == "x <= x^3"
    assert str(growth_inequality(0)) == "x <= x"


@pytest.mark.parametrize("S", [{3, 5}, {1}, {2}, {4, 6}, {2, 5, 7}, set()])
def test_vs_characterization(S):
    rows = vs_characterization(S, 12)
    s = generate(S)
    assert rows == [(m, m in s) for m in range(13)]


@settings(max_examples=20)
@given(st.frozensets(st.integers(1, 6), min_size=1, max_size=3))
def test_vs_characterization_random(S):
    m = syntactic_monoid(build_LS(S)).monoid
    for k in range(13):
        assert satisfies(m, f"x <= x^{k + 1}") == (k in generate(S))


def test_vs_bound_validation():
    with pytest.raises(ValueError):
        vs_characterization({3}, 0)


def test_equal_rows_iff_equal_semigroups():
    subsets = [frozenset(c) for r in range(1, 4) for c in itertools.combinations(range(1, 6), r)]
    rows = {S: tuple(satisfied_growth(S, 12)) for S in subsets}
    for S, T in itertools.combinations(subsets, 2):
        assert (rows[S] == rows[T]) == (generate(S) == generate(T))
