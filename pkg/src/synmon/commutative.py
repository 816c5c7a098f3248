"""Lattice closures of finite language families and shuffle decompositions of
commutative languages."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .automata import Alphabet, Dfa, empty_dfa, extend_alphabet, minimize
from .errors import (
    AlphabetMismatch,
    CapExceeded,
    DEFAULT_FAMILY_CAP,
    DEFAULT_TERM_CAP,
    NotCommutativeError,
    SynmonError,
)
from .languages import equivalent, shuffle, union
from .monoid import Stamp, restricted_product, transition_monoid
from .unary import EPSet, from_epset, to_epset

CLOSURE_OPS = ("union", "intersect", "complement", "left_quotient", "right_quotient")
_ALIASES = {"quotients": ("left_quotient", "right_quotient"), "lattice": ("union", "intersect")}


def _normalize_ops(ops: Iterable[str]) -> tuple[str, ...]:
    wanted = set()
    for op in ops:
        if op in _ALIASES:
            wanted.update(_ALIASES[op])
        elif op in CLOSURE_OPS:
            wanted.add(op)
        else:
            raise ValueError(f"unknown closure operation {op!r}")
    return tuple(op for op in CLOSURE_OPS if op in wanted)


@dataclass(frozen=True)
class ClosureFamily:
    """Least family containing the generators, ∅ and A*, closed under ``ops``.

    ``members`` lists canonical DFAs in discovery order; ``subsets`` gives,
    for each member, the accepting set of ``stamp`` that recognises it.
    """

    members: tuple[Dfa, ...]
    generators: tuple[Dfa, ...]
    ops: tuple[str, ...]
    stamp: Stamp
    subsets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, dfa: Dfa) -> bool:
        return minimize(dfa) in self._index

    @cached_property
    def _index(self) -> frozenset[Dfa]:
        return frozenset(self.members)


def common_stamp(gens: Sequence[Dfa]) -> Stamp:
    """Restricted product of the syntactic stamps of ``gens``."""
    stamps = [transition_monoid(d).stamp for d in gens]
    return reduce(restricted_product, stamps)


def lattice_closure(gens: Iterable[Dfa], ops: Iterable[str] = ("union", "intersect", "quotients"),
                    cap: int = DEFAULT_FAMILY_CAP, alphabet: Alphabet | None = None) -> ClosureFamily:
    """Fixpoint closure, computed on accepting subsets of a common recognising stamp.

    Every language reachable from the generators by Boolean operations and
    quotients is the preimage of a subset of the restricted product of their
    syntactic monoids, so the iteration runs over bitmasks of that monoid.
    Quotients are taken by single letters.
    """
    gens = tuple(minimize(d) for d in gens)
    ops = _normalize_ops(ops)
    alphabets = {d.alphabet for d in gens} | ({alphabet} if alphabet is not None else set())
    if len(alphabets) != 1:
        raise AlphabetMismatch(f"generators must share one alphabet, got {alphabets}")
    (alpha,) = alphabets
    stamp = common_stamp(gens) if gens else common_stamp([empty_dfa(alpha)])
    m = stamp.target
    n = m.n
    full = (1 << n) - 1

    def mask_of(d: Dfa) -> int:
        accepting = stamp.recognizes(d)
        assert accepting is not None
        return sum(1 << x for x in accepting)

    left = [m.mult[g, :].tolist() for g in stamp.images]
    right = [m.mult[:, g].tolist() for g in stamp.images]

    def pull(mask: int, table: list[int]) -> int:
        return sum(1 << x for x in range(n) if mask >> table[x] & 1)

    seen: dict[int, int] = {}
    order: list[int] = []

    def add(mask: int, into: list[int]) -> None:
        if mask not in seen:
            if len(order) >= cap:
                raise CapExceeded("closure family size", cap)
            seen[mask] = len(order)
            order.append(mask)
            into.append(mask)

    frontier: list[int] = []
    for mask in [0, full] + [mask_of(d) for d in gens]:
        add(mask, frontier)
    while frontier:
        fresh: list[int] = []
        for op in ops:
            if op in ("union", "intersect"):
                combine = (lambda a, b: a | b) if op == "union" else (lambda a, b: a & b)
                for a in frontier:
                    for b in list(order):
                        add(combine(a, b), fresh)
            elif op == "complement":
                for a in frontier:
                    add(full ^ a, fresh)
            else:
                tables = left if op == "left_quotient" else right
                for a in frontier:
                    for t in tables:
                        add(pull(a, t), fresh)
        frontier = fresh

    members = tuple(stamp.dfa(x for x in range(n) if mask >> x & 1) for mask in order)
    if len(set(members)) != len(members):
        raise SynmonError("distinct accepting sets gave equal languages; stamp not surjective")
    return ClosureFamily(members, gens, ops, stamp, tuple(order))


@dataclass(frozen=True)
class ShuffleTerm:
    """Shuffle of one-letter languages, one per letter of ``alphabet``."""

    alphabet: Alphabet
    components: tuple[EPSet, ...]

    def component(self, letter: str) -> EPSet:
        return self.components[self.alphabet.index(letter)]

    def to_dfa(self) -> Dfa:
        parts = [extend_alphabet(from_epset(e, a), self.alphabet)
                 for a, e in zip(self.alphabet, self.components)]
        if not parts:
            return minimize(Dfa(self.alphabet, ((),), 0, frozenset({0})))
        out = parts[0]
        for part in parts[1:]:
            out = shuffle(out, part)
        return extend_alphabet(out, self.alphabet)

    def to_text(self) -> str:
        return " ⧢ ".join(f"[{e.to_text(a)}]" for a, e in zip(self.alphabet, self.components))


def _power_fibres(m, g: int) -> dict[int, EPSet]:
    """For each power m of g, the set {n : g^n = m} as an EPSet."""
    seq = [m.identity]
    while True:
        nxt = int(m.mult[seq[-1], g])
        if nxt in seq:
            break
        seq.append(nxt)
    t = seq.index(nxt)
    p = len(seq) - t
    fibres = {}
    for x in dict.fromkeys(seq):
        exceptions = {i for i in range(t) if seq[i] == x}
        residues = {(t + j) % p for j in range(p) if seq[t + j] == x}
        fibres[x] = EPSet(frozenset(exceptions), t, p, frozenset(residues))
    return fibres


def _merge_terms(terms: set[tuple[frozenset[int], ...]], k: int) -> list[tuple[frozenset[int], ...]]:
    """Merge terms differing in a single coordinate until no merge applies."""
    changed = True
    while changed:
        changed = False
        for i in range(k):
            groups: dict[tuple, set[int]] = {}
            for term in terms:
                key = term[:i] + term[i + 1:]
                groups.setdefault(key, set()).update(term[i])
            if len(groups) < len(terms):
                changed = True
                terms = {key[:i] + (frozenset(s),) + key[i:] for key, s in groups.items()}
    return sorted(terms, key=lambda t: tuple(sorted(c) for c in t))


def _union_epsets(sets: Iterable[EPSet], letter: str) -> EPSet:
    dfas = [from_epset(e, letter) for e in sets]
    return to_epset(reduce(union, dfas))


def decompose_commutative(d: Dfa, cap: int = DEFAULT_TERM_CAP) -> list[ShuffleTerm]:
    """Write a commutative language as a finite union of shuffles of one-letter languages.

    The union of the returned terms is checked against the input before returning.
    """
    d = minimize(d)
    data = transition_monoid(d)
    m = data.monoid
    if not m.is_commutative():
        raise NotCommutativeError("syntactic monoid is not commutative")
    alphabet = d.alphabet
    fibres = [_power_fibres(m, g) for g in data.stamp.images]
    choices = [sorted(f) for f in fibres]
    k = len(alphabet)
    in_p = np.zeros(m.n, dtype=bool)
    in_p[list(data.image)] = True

    # reach[i] = products obtainable from letters i..k-1
    reach = [set() for _ in range(k + 1)]
    reach[k] = {m.identity}
    for i in range(k - 1, -1, -1):
        reach[i] = {int(m.mult[x, r]) for x in choices[i] for r in reach[i + 1]}

    found: set[tuple[frozenset[int], ...]] = set()

    def search(i: int, partial: int, picked: tuple[int, ...]) -> None:
        if i == k:
            if in_p[partial]:
                if len(found) >= cap:
                    raise CapExceeded("decomposition term count", cap)
                found.add(tuple(frozenset({x}) for x in picked))
            return
        for x in choices[i]:
            head = int(m.mult[partial, x])
            if any(in_p[m.mult[head, r]] for r in reach[i + 1]):
                search(i + 1, head, picked + (x,))

    search(0, m.identity, ())
    terms = []
    for term in _merge_terms(found, k):
        components = tuple(
            _union_epsets((fibres[i][x] for x in sorted(term[i])), alphabet.symbols[i])
            for i in range(k)
        )
        terms.append(ShuffleTerm(alphabet, components))

    total = reduce(union, (t.to_dfa() for t in terms), empty_dfa(alphabet))
    if not equivalent(total, d):
        raise SynmonError("decomposition does not reproduce the input language")
    return terms
