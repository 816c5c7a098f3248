"""Additive submonoids ⟨S⟩ of ℕ and the languages L_S = {a^(n+1) : n ∈ ⟨S⟩}."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable

from .automata import Dfa
from .ineq import Finite, Inequality, OmegaTerm, check
from .monoid import syntactic_monoid
from .unary import EPSet, canonical, from_epset

DEFAULT_M_BOUND = 12


def _sums_bitset(gens: list[int], bound: int) -> list[bool]:
    member = [False] * (bound + 1)
    member[0] = True
    for n in range(1, bound + 1):
        member[n] = any(g <= n and member[n - g] for g in gens)
    return member


@dataclass(frozen=True)
class NumericalSemigroup:
    """⟨S⟩ for a finite S ⊆ ℕ.

    When gcd(S) = g > 1 everything is computed for S/g and scaled back, so
    ``conductor`` is None (no cofinite tail) and ``gcd`` records g.
    """

    generators: frozenset[int]

    @cached_property
    def gcd(self) -> int:
        g = 0
        for s in self.generators:
            g = gcd(g, s)
        return g

    @cached_property
    def _scaled(self) -> tuple[list[bool], int]:
        """Membership of ⟨S/g⟩ up to the stabilisation bound, and its conductor."""
        g = self.gcd
        if g == 0:
            return [True], 0
        scaled = sorted({s // g for s in self.generators if s})
        top = max(scaled)
        bound = 2 * top * top + top
        member = _sums_bitset(scaled, bound)
        conductor = bound + 1
        while conductor > 0 and member[conductor - 1]:
            conductor -= 1
        return member, conductor

    @property
    def conductor(self) -> int | None:
        """Least c with every n >= c in ⟨S⟩; None when gcd(S) > 1 or S ⊆ {0}."""
        if self.gcd != 1:
            return None
        return self._scaled[1]

    @property
    def bitset_bound(self) -> int:
        """Largest n for which ``membership`` is stored explicitly."""
        return (len(self._scaled[0]) - 1) * max(self.gcd, 1)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        g = self.gcd
        if g == 0:
            return n == 0
        if n % g:
            return False
        member, conductor = self._scaled
        k = n // g
        return k >= conductor or member[k]

    def members(self, upto: int) -> list[int]:
        return [n for n in range(upto + 1) if n in self]

    @property
    def membership(self) -> list[bool]:
        return [n in self for n in range(self.bitset_bound + 1)]

    @cached_property
    def minimal_generators(self) -> frozenset[int]:
        """F_S: the elements of S not expressible through smaller generators."""
        kept: list[int] = []
        for s in sorted({s for s in self.generators if s}):
            if not _sums_bitset(kept, s)[s]:
                kept.append(s)
        return frozenset(kept)

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.minimal_generators == other.minimal_generators

    def __hash__(self):
        return hash(self.minimal_generators)

    def to_epset(self) -> EPSet:
        g = self.gcd
        if g == 0:
            return canonical(EPSet(frozenset({0}), 1, 1, frozenset()))
        _, c = self._scaled
        t = g * c
        return canonical(EPSet(frozenset(n for n in range(t) if n in self), t, g, frozenset({0})))


def generate(gens: Iterable[int]) -> NumericalSemigroup:
    gens = frozenset(gens)
    if any(s < 0 for s in gens):
        raise ValueError("generators must be natural numbers")
    return NumericalSemigroup(gens)


def build_LS(gens: Iterable[int], letter: str = "a") -> Dfa:
    """DFA of L_S = {a^(n+1) : n ∈ ⟨S⟩}."""
    e = generate(gens).to_epset()
    shifted = EPSet(frozenset(n + 1 for n in e.exceptions), e.threshold + 1, e.period,
                    frozenset((r + 1) % e.period for r in e.residues))
    return from_epset(canonical(shifted), letter)


def growth_inequality(m: int) -> Inequality:
    """x <= x^(m+1)."""
    return Inequality(OmegaTerm((("x", Finite(1)),)), OmegaTerm((("x", Finite(m + 1)),)))


def satisfied_growth(gens: Iterable[int], m_bound: int = DEFAULT_M_BOUND) -> list[tuple[int, bool]]:
    """(m, whether M(L_S) satisfies x <= x^(m+1)) for m = 0..m_bound."""
    monoid = syntactic_monoid(build_LS(gens)).monoid
    return [(m, check(monoid, growth_inequality(m)).holds) for m in range(m_bound + 1)]


def vs_characterization(gens: Iterable[int], m_bound: int = DEFAULT_M_BOUND) -> list[tuple[int, bool]]:
    """Inequality verdicts for m = 0..m_bound, each required to agree with m ∈ ⟨S⟩."""
    if m_bound < 1:
        raise ValueError("m_bound must be >= 1")
    gens = frozenset(gens)
    semigroup = generate(gens)
    rows = satisfied_growth(gens, m_bound)
    for m, holds in rows:
        if holds != (m in semigroup):
            raise AssertionError(
                f"S={sorted(gens)}: x <= x^{m + 1} is {'satisfied' if holds else 'violated'} "
                f"but m {'is not' if holds else 'is'} in <S>"
            )
    return rows
