"""Downset monoids P↓(M), P₀↓(M) of an ordered monoid, and U₁↓.

Downsets are handled as integer bitmasks over the elements of M (bit x set
when x is a member).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import CapExceeded, DEFAULT_DOWNSET_BASE_CAP, DEFAULT_MONOID_CAP
from .monoid import OrderedMonoid, direct_product


@dataclass(frozen=True)
class Downset:
    monoid: OrderedMonoid = field(compare=False, repr=False)
    mask: int

    def __post_init__(self):
        if downclose_mask(self.monoid, self.mask) != self.mask:
            raise ValueError("not a downset")

    @property
    def members(self) -> frozenset[int]:
        return frozenset(x for x in range(self.monoid.n) if self.mask >> x & 1)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def sorted(self) -> list[int]:
        return sorted(self.members)


def _down_masks(m: OrderedMonoid) -> list[int]:
    """down[x] = bitmask of {y : y <= x}."""
    return [sum(1 << y for y in np.nonzero(m.leq[:, x])[0]) for x in range(m.n)]


def downclose_mask(m: OrderedMonoid, mask: int) -> int:
    down = _down_masks(m)
    out = 0
    for x in range(m.n):
        if mask >> x & 1:
            out |= down[x]
    return out


def downclose(m: OrderedMonoid, elements: Iterable[int]) -> Downset:
    """Smallest downset containing ``elements``."""
    mask = 0
    for x in elements:
        if not 0 <= x < m.n:
            raise ValueError(f"{x} is not an element of the monoid")
        mask |= 1 << x
    return Downset(m, downclose_mask(m, mask))


def downsets(m: OrderedMonoid, include_empty: bool,
             base_cap: int = DEFAULT_DOWNSET_BASE_CAP) -> list[int]:
    """All (nonempty) downsets as bitmasks, in ascending order."""
    if m.n > base_cap:
        raise CapExceeded("downset base monoid size", base_cap)
    masks = np.arange(1 << m.n, dtype=np.int64)
    closed = np.ones(masks.shape, dtype=bool)
    for x, d in enumerate(_down_masks(m)):
        has_x = (masks >> x) & 1 == 1
        closed &= ~has_x | ((masks & d) == d)
    if not include_empty:
        closed[0] = False
    return [int(v) for v in masks[closed]]


def _members_name(m: OrderedMonoid, mask: int) -> str:
    return "{" + ",".join(m.names[x] for x in range(m.n) if mask >> x & 1) + "}"


def downset_monoid(m: OrderedMonoid, include_empty: bool = False,
                   base_cap: int = DEFAULT_DOWNSET_BASE_CAP,
                   size_cap: int = DEFAULT_MONOID_CAP) -> OrderedMonoid:
    """P↓(M) (nonempty downsets) or P₀↓(M) (all downsets), ordered by inclusion.

    The product of X and Y is the downset generated by all products xy.
    Elements are indexed by ascending bitmask, so the empty set comes first
    when present.
    """
    masks = downsets(m, include_empty, base_cap)
    d = len(masks)
    if d > size_cap:
        raise CapExceeded("downset monoid size", size_cap)
    down = _down_masks(m)
    index = {mask: i for i, mask in enumerate(masks)}
    arr = np.array(masks, dtype=np.int64)
    # reach[x, j] = downset generated by x * D_j
    reach = np.zeros((m.n, d), dtype=np.int64)
    for x in range(m.n):
        for y in range(m.n):
            has_y = (arr >> y) & 1 == 1
            reach[x, has_y] |= down[int(m.mult[x, y])]
    lookup = np.full(1 << m.n, -1, dtype=np.int64)
    lookup[arr] = np.arange(d)
    mult = np.empty((d, d), dtype=np.int64)
    for i, mask in enumerate(masks):
        members = [x for x in range(m.n) if mask >> x & 1]
        prod = np.bitwise_or.reduce(reach[members], axis=0) if members else np.zeros(d, np.int64)
        mult[i] = lookup[prod]
    leq = (arr[:, None] & ~arr[None, :]) == 0
    identity = index[down[m.identity]]
    names = [_members_name(m, mask) for mask in masks]
    return OrderedMonoid(mult, identity, leq, names)


def u1_down() -> OrderedMonoid:
    """{1, 0} with 0 a zero and 0 < 1; element 0 is the identity 1."""
    return OrderedMonoid([[0, 1], [1, 1]], 0, [[True, False], [True, True]], ["1", "0"])


def quotient_check(m: OrderedMonoid, base_cap: int = DEFAULT_DOWNSET_BASE_CAP) -> bool:
    """Whether (X, 1) -> X, (X, 0) -> ∅ is a surjective, order-preserving morphism
    from P↓(M) x U₁↓ onto P₀↓(M)."""
    nonempty = downsets(m, False, base_cap)
    all_sets = downsets(m, True, base_cap)
    p = downset_monoid(m, False, base_cap)
    p0 = downset_monoid(m, True, base_cap)
    prod = direct_product(p, u1_down())
    where = {mask: i for i, mask in enumerate(all_sets)}
    empty = where[0]
    # product index i * 2 + j; j = 0 is the identity of U₁↓, j = 1 its zero
    phi = np.array([where[nonempty[i]] if j == 0 else empty
                    for i in range(p.n) for j in range(2)])
    surjective = set(phi.tolist()) == set(range(p0.n))
    morphism = bool((phi[prod.mult] == p0.mult[phi[:, None], phi[None, :]]).all()) and \
        phi[prod.identity] == p0.identity
    monotone = not (prod.leq & ~p0.leq[phi[:, None], phi[None, :]]).any()
    return bool(surjective and morphism and monotone)
