"""Eventually periodic subsets of ℕ and their one-letter automata."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .automata import Alphabet, Dfa, minimize
from .errors import AlphabetMismatch


@dataclass(frozen=True)
class EPSet:
    """n is a member iff n in exceptions (when n < threshold) or n % period in residues.

    Values returned by :func:`to_epset` and the arithmetic below are canonical:
    threshold and period are as small as possible.
    """

    exceptions: frozenset[int] = frozenset()
    threshold: int = 0
    period: int = 1
    residues: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "exceptions", frozenset(self.exceptions))
        object.__setattr__(self, "residues", frozenset(self.residues))
        if self.period < 1 or self.threshold < 0:
            raise ValueError("period must be >= 1 and threshold >= 0")
        if any(not 0 <= e < self.threshold for e in self.exceptions):
            raise ValueError("exceptions must lie below the threshold")
        if any(not 0 <= r < self.period for r in self.residues):
            raise ValueError("residues must lie in [0, period)")

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.threshold:
            return n in self.exceptions
        return n % self.period in self.residues

    def members(self, upto: int) -> list[int]:
        return [n for n in range(upto + 1) if n in self]

    def is_finite(self) -> bool:
        return not self.residues

    def to_text(self, letter: str = "a") -> str:
        """Regex text in the package grammar, e.g. ``a + (a^3 + a^4)(a^7)*``."""

        def pw(k):
            return "1" if k == 0 else letter if k == 1 else f"{letter}^{k}"

        parts = [pw(e) for e in sorted(self.exceptions)]
        starts = [self.threshold + j for j in range(self.period)
                  if (self.threshold + j) % self.period in self.residues]
        if starts:
            loop = f"{letter}*" if self.period == 1 else f"({pw(self.period)})*"
            if len(starts) == 1:
                head = pw(starts[0])
                parts.append(loop if head == "1" else head + loop)
            else:
                parts.append("(" + " + ".join(pw(s) for s in starts) + ")" + loop)
        return " + ".join(parts) if parts else "0"


def from_epset(e: EPSet, letter: str = "a") -> Dfa:
    t, p = e.threshold, e.period
    delta = [(i + 1,) for i in range(t + p - 1)] + [(t,)]
    finals = {i for i in range(t) if i in e.exceptions}
    finals |= {t + j for j in range(p) if (t + j) % p in e.residues}
    return minimize(Dfa(Alphabet(letter), tuple(delta), 0, frozenset(finals)))


def to_epset(d: Dfa) -> EPSet:
    if len(d.alphabet) != 1:
        raise AlphabetMismatch(f"expected a one-letter alphabet, got {d.alphabet}")
    d = minimize(d)
    seen: dict[int, int] = {}
    q = d.initial
    while q not in seen:
        seen[q] = len(seen)
        q = d.delta[q][0]
    t = seen[q]
    p = len(seen) - t
    path = list(seen)
    exceptions = {n for n in range(t) if path[n] in d.finals}
    residues = {(t + j) % p for j in range(p) if path[t + j] in d.finals}
    return EPSet(frozenset(exceptions), t, p, frozenset(residues))


def canonical(e: EPSet) -> EPSet:
    return to_epset(from_epset(e))


def from_members(members: Iterable[int], threshold: int, period: int = 1,
                 residues: Iterable[int] = ()) -> EPSet:
    """Finite part listed explicitly below ``threshold``; canonicalised."""
    members = {n for n in members if n < threshold}
    return canonical(EPSet(frozenset(members), threshold, period, frozenset(residues)))


def ep_shift(e: EPSet) -> EPSet:
    """L - 1 = {n : n + 1 in L}."""
    t = max(e.threshold - 1, 0)
    exceptions = {n for n in range(t) if n + 1 in e.exceptions}
    residues = {(r - 1) % e.period for r in e.residues}
    return canonical(EPSet(frozenset(exceptions), t, e.period, frozenset(residues)))


def ep_divide(e: EPSet, k: int) -> EPSet:
    """L ÷ k = {n : kn in L}."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    t = -(-e.threshold // k)
    exceptions = {n for n in range(t) if k * n in e.exceptions}
    residues = {r for r in range(e.period) if (k * r) % e.period in e.residues}
    return canonical(EPSet(frozenset(exceptions), t, e.period, frozenset(residues)))
