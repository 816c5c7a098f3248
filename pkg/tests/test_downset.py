import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from synmon import (
    Downset,
    OrderedMonoid,
    downclose,
    downset_monoid,
    isomorphic,
    quotient_check,
    satisfies,
    syntactic_monoid,
    transition_monoid,
    trivial_monoid,
    u1_down,
)
from synmon.errors import CapExceeded

from conftest import dfas, unary

ONE_PLUS_A = syntactic_monoid(unary("1 + a")).monoid
CHAIN = syntactic_monoid(unary("a + a^6 a*")).monoid


def test_downclose_examples():
    assert downclose(ONE_PLUS_A, {0}).members == {0, 1, 2}
    assert downclose(CHAIN, set()).members == frozenset()
    assert downclose(CHAIN, {5}).sorted() == [0, 2, 3, 4, 5]


def test_downset_rejects_non_downsets():
    with pytest.raises(ValueError):
        Downset(ONE_PLUS_A, 0b001)  # {1} without a and 0


def test_p0_of_trivial_is_u1():
    assert isomorphic(downset_monoid(trivial_monoid(), include_empty=True), u1_down())


def test_p_of_trivial_is_trivial():
    assert downset_monoid(trivial_monoid()).n == 1


def test_u1_laws():
    u = u1_down()
    assert satisfies(u, "x <= 1") and satisfies(u, "xy = yx") and satisfies(u, "x = x^2")
    assert not satisfies(u, "1 <= x")


def test_power_monoid_of_cycle():
    m = transition_monoid(unary("a + (a^3 + a^4)(a^7)*")).monoid
    p = downset_monoid(m)
    assert p.n == 511
    assert satisfies(p, "xy = yx") and satisfies(p, "x^w = x^(w+7)")
    assert not satisfies(p, "x^w = x^(w+1)")


@pytest.mark.parametrize("m", [trivial_monoid(), ONE_PLUS_A, CHAIN], ids=["trivial", "1+a", "chain"])
def test_quotient_check(m):
    assert quotient_check(m)


def _brute_product(m, X, Y):
    return downclose(m, {int(m.mult[x, y]) for x in X for y in Y}).members


@settings(max_examples=10)
@given(dfas("ab", 3))
def test_downset_monoid_laws(d):
    m = syntactic_monoid(d).monoid
    if m.n > 8:
        return
    p0 = downset_monoid(m, include_empty=True)
    members = [frozenset(m.names.index(s) for s in name.strip("{}").split(",") if s) for name in p0.names]
    # product = downclosure of pointwise products; order = inclusion
    for i, j in itertools.product(range(p0.n), repeat=2):
        assert members[p0.mult[i, j]] == _brute_product(m, members[i], members[j])
        assert p0.le(i, j) == (members[i] <= members[j])
        dominated = all(any(m.le(x, y) for y in members[j]) for x in members[i])
        assert dominated == (members[i] <= members[j])
    assert members[p0.identity] == downclose(m, {m.identity}).members
    empty = members.index(frozenset())
    assert all(p0.mult[empty, i] == empty == p0.mult[i, empty] for i in range(p0.n))
    # P↓ sits inside P0↓ as the nonempty downsets
    p = downset_monoid(m)
    assert p.n == p0.n - 1
    assert quotient_check(m)


def test_equality_order_gives_full_power_monoid():
    m = transition_monoid(unary("(aa)*")).monoid
    assert downset_monoid(m).n == 2 ** m.n - 1


def test_base_cap():
    big = OrderedMonoid([[min(i + j, 16) for j in range(17)] for i in range(17)])
    with pytest.raises(CapExceeded):
        downset_monoid(big)
