"""Finite ordered monoids, stamps, and syntactic ordered monoids of regular languages."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .automata import Alphabet, Dfa, minimize
from .errors import AlphabetMismatch, CapExceeded, DEFAULT_MONOID_CAP

EXHAUSTIVE_ASSOCIATIVITY = 64
SAMPLED_TRIPLES = 20_000


class OrderedMonoid:
    """A finite monoid given by its multiplication table, with a compatible partial order.

    ``mult[x, y]`` is the index of the product xy and ``leq[x, y]`` is True when
    x <= y. Arrays are stored read-only; construct a new monoid to change anything.
    """

    def __init__(self, mult, identity: int = 0, leq=None, names: Sequence[str] | None = None,
                 check: bool = True):
        mult = np.array(mult, dtype=np.int64)
        if mult.ndim != 2 or mult.shape[0] != mult.shape[1] or mult.shape[0] == 0:
            raise ValueError("multiplication table must be a nonempty square matrix")
        n = mult.shape[0]
        leq = np.eye(n, dtype=bool) if leq is None else np.array(leq, dtype=bool)
        if leq.shape != (n, n):
            raise ValueError("order matrix must match the multiplication table")
        if names is None:
            names = [str(i) for i in range(n)]
        if len(names) != n:
            raise ValueError("need one name per element")
        mult.setflags(write=False)
        leq.setflags(write=False)
        self.mult = mult
        self.leq = leq
        self.identity = int(identity)
        self.names = tuple(names)
        if check:
            self.validate()

    @property
    def n(self) -> int:
        return self.mult.shape[0]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"<OrderedMonoid n={self.n} strict_pairs={len(self.strict_pairs())}>"

    def validate(self) -> None:
        n, mult, leq, e = self.n, self.mult, self.leq, self.identity
        if mult.min() < 0 or mult.max() >= n:
            raise ValueError("table entries out of range")
        if not 0 <= e < n:
            raise ValueError("identity out of range")
        r = np.arange(n)
        if not ((mult[e] == r).all() and (mult[:, e] == r).all()):
            raise ValueError(f"element {e} is not a two-sided identity")
        if n <= EXHAUSTIVE_ASSOCIATIVITY:
            for x in range(n):
                if not (mult[mult[x]] == mult[x][mult]).all():
                    raise ValueError("multiplication is not associative")
        else:
            rng = np.random.default_rng(0)
            x, y, z = rng.integers(0, n, size=(3, SAMPLED_TRIPLES))
            if not (mult[mult[x, y], z] == mult[x, mult[y, z]]).all():
                raise ValueError("multiplication is not associative")
        if not leq.diagonal().all():
            raise ValueError("order is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("order is not antisymmetric")
        lf = leq.astype(np.float32)
        if ((lf @ lf > 0) & ~leq).any():
            raise ValueError("order is not transitive")
        xs, ys = np.nonzero(leq)
        if not (leq[mult[:, xs], mult[:, ys]].all() and leq[mult[xs, :], mult[ys, :]].all()):
            raise ValueError("order is not compatible with the product")

    def product(self, *elements: int) -> int:
        out = self.identity
        for x in elements:
            out = int(self.mult[out, x])
        return out

    def power(self, x: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = int(self.mult[out, x])
        return out

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def strict_pairs(self) -> set[tuple[int, int]]:
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        return {(int(i), int(j)) for i, j in zip(*np.nonzero(strict))}

    def covers(self) -> set[tuple[int, int]]:
        """Covering pairs (x, y): x < y with nothing strictly between (the Hasse diagram)."""
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        sf = strict.astype(np.float32)
        composite = (sf @ sf) > 0
        return {(int(i), int(j)) for i, j in zip(*np.nonzero(strict & ~composite))}

    def is_commutative(self) -> bool:
        return bool((self.mult == self.mult.T).all())

    @cached_property
    def omega(self) -> np.ndarray:
        """omega[x] is the unique idempotent power of x."""
        n, mult = self.n, self.mult
        out = np.full(n, -1, dtype=np.int64)
        cur = np.arange(n)
        for _ in range(n):
            todo = out < 0
            if not todo.any():
                break
            idem = (mult[cur, cur] == cur) & todo
            out[idem] = cur[idem]
            cur = mult[cur, np.arange(n)]
        out.setflags(write=False)
        return out

    def idempotents(self) -> frozenset[int]:
        r = np.arange(self.n)
        return frozenset(int(x) for x in r[self.mult[r, r] == r])

    def is_upset(self, subset: Iterable[int]) -> bool:
        mask = np.zeros(self.n, dtype=bool)
        mask[list(subset)] = True
        return not (self.leq[mask] & ~mask).any()

    def with_order(self, leq) -> OrderedMonoid:
        return OrderedMonoid(self.mult, self.identity, leq, self.names)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "identity": self.identity,
            "mult": self.mult.tolist(),
            "leq": self.leq.tolist(),
            "names": list(self.names),
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> OrderedMonoid:
        if isinstance(data, str):
            data = json.loads(data)
        m = cls(data["mult"], data.get("identity", 0), data.get("leq"), data.get("names"))
        if m.n != data["n"]:
            raise ValueError("'n' does not match the table size")
        return m

    def to_dot(self, name: str = "order") -> str:
        """Hasse diagram, drawn bottom-up; edges are covering pairs only."""
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, label in enumerate(self.names):
            lines.append(f'  {i} [label="{label}"];')
        for i, j in sorted(self.covers()):
            lines.append(f"  {i} -> {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def trivial_monoid() -> OrderedMonoid:
    return OrderedMonoid([[0]], 0, names=["1"])


def direct_product(m1: OrderedMonoid, m2: OrderedMonoid) -> OrderedMonoid:
    """Product monoid with the product order; (x1, x2) has index x1 * |M2| + x2."""
    n1, n2 = m1.n, m2.n
    a = np.arange(n1 * n2)
    x1, x2 = a // n2, a % n2
    mult = m1.mult[x1[:, None], x1[None, :]] * n2 + m2.mult[x2[:, None], x2[None, :]]
    leq = m1.leq[x1[:, None], x1[None, :]] & m2.leq[x2[:, None], x2[None, :]]
    names = [f"({m1.names[i]},{m2.names[j]})" for i, j in zip(x1, x2)]
    return OrderedMonoid(mult, m1.identity * n2 + m2.identity, leq, names)


@dataclass(frozen=True)
class _Generated:
    elements: list
    parent: list[int]
    letter: list[int]
    right: np.ndarray  # right[i, k] = index of element_i * generator_k
    mult: np.ndarray


def _generate(identity: Hashable, generators: Sequence[Hashable],
              mul: Callable[[Hashable, Hashable], Hashable], cap: int) -> _Generated:
    """Breadth-first closure of ``generators`` under ``mul`` starting at ``identity``.

    Elements come out in shortlex order of their shortest representative word,
    with the identity first.
    """
    index = {identity: 0}
    elements = [identity]
    parent, letter = [-1], [-1]
    right = []
    i = 0
    while i < len(elements):
        row = []
        for k, g in enumerate(generators):
            e = mul(elements[i], g)
            if e not in index:
                if len(elements) >= cap:
                    raise CapExceeded("monoid size", cap)
                index[e] = len(elements)
                elements.append(e)
                parent.append(i)
                letter.append(k)
            row.append(index[e])
        right.append(row)
        i += 1
    n = len(elements)
    right = np.array(right, dtype=np.int64).reshape(n, len(generators))
    # x * y: follow the representative word of y through the right Cayley graph from x.
    mult = np.empty((n, n), dtype=np.int64)
    mult[:, 0] = np.arange(n)
    for j in range(1, n):
        mult[:, j] = right[mult[:, parent[j]], letter[j]]
    return _Generated(elements, parent, letter, right, mult)


def compact_word(word: str) -> str:
    """'aaab' -> 'a^3b'; the empty word is '1'."""
    if not word:
        return "1"
    out = []
    for symbol, run in itertools.groupby(word):
        k = len(list(run))
        out.append(symbol if k == 1 else f"{symbol}^{k}")
    return "".join(out)


@dataclass(frozen=True)
class Stamp:
    """Monoid morphism A* -> M given by the images of the letters."""

    alphabet: Alphabet
    target: OrderedMonoid
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != len(self.alphabet):
            raise ValueError("need one image per letter")

    def image(self, letter: str) -> int:
        return self.images[self.alphabet.index(letter)]

    def __call__(self, word: str) -> int:
        return self.target.product(*(self.image(a) for a in word))

    @cached_property
    def surjective(self) -> bool:
        mult = self.target.mult
        gen = _generate(self.target.identity, self.images, lambda x, g: int(mult[x, g]),
                        self.target.n + 1)
        return len(gen.elements) == self.target.n

    def dfa(self, accepting: Iterable[int]) -> Dfa:
        """Canonical DFA of the preimage of ``accepting``."""
        m = self.target
        delta = tuple(tuple(int(m.mult[x, g]) for g in self.images) for x in range(m.n))
        return minimize(Dfa(self.alphabet, delta, m.identity, frozenset(accepting)))

    def recognizes(self, dfa: Dfa) -> frozenset[int] | None:
        """Subset P with dfa's language = preimage of P, if one exists."""
        # Each element's fibre is either inside or outside L when L is recognised;
        # the shortest representative decides which.
        mult = self.target.mult
        gen = _generate(self.target.identity, self.images, lambda x, g: int(mult[x, g]),
                        self.target.n + 1)
        words = _representatives(gen, self.alphabet)
        elements = gen.elements
        accepting = frozenset(e for e, w in zip(elements, words) if dfa.accepts(w))
        return accepting if self.dfa(accepting) == minimize(dfa) else None


def _representatives(gen: _Generated, alphabet: Alphabet) -> list[str]:
    words = [""]
    for j in range(1, len(gen.elements)):
        words.append(words[gen.parent[j]] + alphabet.symbols[gen.letter[j]])
    return words


@dataclass(frozen=True)
class SyntacticData:
    """Syntactic monoid M(L), syntactic stamp, and syntactic image P of a language."""

    monoid: OrderedMonoid
    stamp: Stamp
    image: frozenset[int]
    dfa: Dfa
    representatives: tuple[str, ...]
    transformations: tuple[tuple[int, ...], ...]

    def with_monoid(self, monoid: OrderedMonoid) -> SyntacticData:
        stamp = Stamp(self.stamp.alphabet, monoid, self.stamp.images)
        return SyntacticData(monoid, stamp, self.image, self.dfa,
                             self.representatives, self.transformations)


def transition_monoid(dfa: Dfa, cap: int = DEFAULT_MONOID_CAP) -> SyntacticData:
    """Transition monoid of the minimal automaton, with equality order.

    Element i is the transformation of a shortest word w_i; w_0 is the empty word.
    """
    dfa = minimize(dfa)
    letters = [tuple(row[k] for row in dfa.delta) for k in range(len(dfa.alphabet))]
    identity = tuple(range(dfa.n_states))
    gen = _generate(identity, letters, lambda f, g: tuple(g[q] for q in f), cap)
    words = _representatives(gen, dfa.alphabet)
    names = [compact_word(w) for w in words]
    monoid = OrderedMonoid(gen.mult, 0, None, names, check=len(gen.elements) <= 256)
    images = tuple(int(gen.right[0, k]) for k in range(len(letters)))
    image = frozenset(i for i, f in enumerate(gen.elements) if f[dfa.initial] in dfa.finals)
    return SyntacticData(monoid, Stamp(dfa.alphabet, monoid, images), image, dfa,
                         tuple(words), tuple(gen.elements))


def context_matrix(monoid: OrderedMonoid, image: Iterable[int]) -> np.ndarray:
    """Row u lists, over all contexts (x, y), whether xuy lies in ``image``."""
    n, mult = monoid.n, monoid.mult
    in_p = np.zeros(n, dtype=bool)
    in_p[list(image)] = True
    rows = np.empty((n, n * n), dtype=bool)
    for u in range(n):
        rows[u] = in_p[mult[mult[:, u]]].ravel()
    return rows


def syntactic_order(data: SyntacticData) -> OrderedMonoid:
    """u <= v iff xuy in P implies xvy in P for all x, y in M."""
    n = data.monoid.n
    packed = np.packbits(context_matrix(data.monoid, data.image), axis=1)
    leq = np.empty((n, n), dtype=bool)
    for u in range(n):
        leq[u] = ~(packed[u] & ~packed).any(axis=1)
    return data.monoid.with_order(leq)


def syntactic_monoid(dfa: Dfa, cap: int = DEFAULT_MONOID_CAP) -> SyntacticData:
    """Ordered syntactic monoid of L(dfa) with its stamp and image."""
    data = transition_monoid(dfa, cap)
    return data.with_monoid(syntactic_order(data))


def restricted_product(s1: Stamp, s2: Stamp, cap: int = DEFAULT_MONOID_CAP) -> Stamp:
    """Stamp a -> (s1(a), s2(a)) onto the submonoid of M1 x M2 it generates."""
    if s1.alphabet != s2.alphabet:
        raise AlphabetMismatch(f"{s1.alphabet} != {s2.alphabet}")
    m1, m2 = s1.target, s2.target
    gens = list(zip(s1.images, s2.images))
    gen = _generate((m1.identity, m2.identity), gens,
                    lambda x, g: (int(m1.mult[x[0], g[0]]), int(m2.mult[x[1], g[1]])), cap)
    pairs = np.array(gen.elements)
    leq = m1.leq[pairs[:, 0][:, None], pairs[:, 0][None, :]] & \
        m2.leq[pairs[:, 1][:, None], pairs[:, 1][None, :]]
    names = [f"({m1.names[i]},{m2.names[j]})" for i, j in gen.elements]
    target = OrderedMonoid(gen.mult, 0, leq, names)
    images = tuple(int(gen.right[0, k]) for k in range(len(gens)))
    return Stamp(s1.alphabet, target, images)


@dataclass(frozen=True)
class MonoidProps:
    commutative: bool
    aperiodic: bool
    idempotents: frozenset[int]
    omega: tuple[int, ...]


def monoid_props(m: OrderedMonoid) -> MonoidProps:
    omega = m.omega
    aperiodic = bool((m.mult[omega, np.arange(m.n)] == omega).all())
    return MonoidProps(m.is_commutative(), aperiodic, m.idempotents(), tuple(int(x) for x in omega))


def generators(m: OrderedMonoid) -> list[int]:
    """A small generating set, chosen greedily in index order."""
    gens: list[int] = []
    reached = {m.identity}
    for x in range(m.n):
        if x in reached:
            continue
        gens.append(x)
        gen = _generate(m.identity, gens, lambda a, b: int(m.mult[a, b]), m.n + 1)
        reached = set(gen.elements)
        if len(reached) == m.n:
            break
    return gens


def _signature(m: OrderedMonoid, x: int) -> tuple:
    seen = []
    y = x
    while y not in seen:
        seen.append(y)
        y = int(m.mult[y, x])
    return (len(seen), seen.index(y), x == m.identity,
            int(m.leq[x].sum()), int(m.leq[:, x].sum()))


def find_isomorphism(m: OrderedMonoid, n: OrderedMonoid) -> list[int] | None:
    """An order isomorphism M -> N as an index list, or None."""
    if m.n != n.n or len(m.idempotents()) != len(n.idempotents()):
        return None
    if m.n > EXHAUSTIVE_ASSOCIATIVITY:
        raise CapExceeded("isomorphism search size", EXHAUSTIVE_ASSOCIATIVITY)
    gens = generators(m)
    gen = _generate(m.identity, gens, lambda a, b: int(m.mult[a, b]), m.n + 1)
    candidates = [[y for y in range(n.n) if _signature(n, y) == _signature(m, g)] for g in gens]
    for choice in itertools.product(*candidates):
        phi = [0] * m.n
        images = [n.identity]
        for j in range(1, len(gen.elements)):
            images.append(int(n.mult[images[gen.parent[j]], choice[gen.letter[j]]]))
        for e, img in zip(gen.elements, images):
            phi[e] = img
        if len(set(phi)) != m.n:
            continue
        p = np.array(phi)
        if (p[m.mult] == n.mult[p[:, None], p[None, :]]).all() and \
                (m.leq == n.leq[p[:, None], p[None, :]]).all():
            return phi
    return None


def isomorphic(m: OrderedMonoid, n: OrderedMonoid) -> bool:
    return find_isomorphism(m, n) is not None
