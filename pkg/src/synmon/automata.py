"""Finite automata: alphabets, NFAs, total DFAs and their canonical form.

Every DFA produced by the public operations is *canonical*: minimal, total,
with states numbered in breadth-first order from the initial state and
symbols visited in alphabet order. Two canonical DFAs over the same
alphabet are equal as Python values iff they recognise the same language.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import AlphabetMismatch, CapExceeded, MorphismKindError, state_cap


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __init__(self, symbols: Iterable[str] = ()):
        symbols = tuple(symbols)
        for s in symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise ValueError(f"alphabet symbols must be single characters, got {s!r}")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbols in alphabet {symbols}")
        object.__setattr__(self, "symbols", symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.symbols

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.symbols)!r})"

    def index(self, symbol: str) -> int:
        return self.symbols.index(symbol)

    def union(self, other: Alphabet) -> Alphabet:
        return Alphabet(self.symbols + tuple(s for s in other.symbols if s not in self.symbols))

    def words(self, max_length: int) -> Iterator[str]:
        """All words of length <= max_length in shortlex order."""
        layer = [""]
        for _ in range(max_length + 1):
            yield from layer
            layer = [w + s for w in layer for s in self.symbols]


def as_alphabet(alphabet: Alphabet | Iterable[str]) -> Alphabet:
    return alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)


@dataclass(frozen=True)
class Nfa:
    """Epsilon-free NFA. ``transitions`` holds (source, symbol, target) triples."""

    n_states: int
    alphabet: Alphabet
    transitions: frozenset[tuple[int, str, int]]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        for p, a, q in self.transitions:
            if not (0 <= p < self.n_states and 0 <= q < self.n_states):
                raise ValueError(f"transition ({p}, {a!r}, {q}) has an invalid endpoint")
            if a not in self.alphabet:
                raise ValueError(f"transition symbol {a!r} not in {self.alphabet}")
        if not all(0 <= q < self.n_states for q in self.initials | self.finals):
            raise ValueError("initial/final state out of range")

    def successors(self) -> dict[tuple[int, str], set[int]]:
        table: dict[tuple[int, str], set[int]] = {}
        for p, a, q in self.transitions:
            table.setdefault((p, a), set()).add(q)
        return table

    def accepts(self, word: str) -> bool:
        succ = self.successors()
        current = set(self.initials)
        for a in word:
            current = {q for p in current for q in succ.get((p, a), ())}
        return bool(current & self.finals)


@dataclass(frozen=True)
class Dfa:
    """Total DFA; ``delta[q][i]`` is the successor of ``q`` on symbol ``alphabet.symbols[i]``."""

    alphabet: Alphabet
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        n = len(self.delta)
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        for row in self.delta:
            if len(row) != len(self.alphabet):
                raise ValueError("delta rows must have one entry per symbol")
            if not all(0 <= q < n for q in row):
                raise ValueError("delta target out of range")
        if not all(0 <= q < n for q in self.finals):
            raise ValueError("final state out of range")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def step(self, state: int, word: str) -> int:
        index = self.alphabet.index
        for a in word:
            state = self.delta[state][index(a)]
        return state

    def accepts(self, word: str) -> bool:
        return self.step(self.initial, word) in self.finals

    def language(self, max_length: int) -> set[str]:
        """Accepted words of length <= max_length."""
        return {w for w in self.alphabet.words(max_length) if self.accepts(w)}

    def with_finals(self, finals: Iterable[int]) -> Dfa:
        return Dfa(self.alphabet, self.delta, self.initial, frozenset(finals))

    def with_initial(self, initial: int) -> Dfa:
        return Dfa(self.alphabet, self.delta, initial, self.finals)

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet.symbols),
            "states": self.n_states,
            "initial": self.initial,
            "finals": sorted(self.finals),
            "delta": [list(row) for row in self.delta],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> Dfa:
        if isinstance(data, str):
            data = json.loads(data)
        dfa = cls(
            Alphabet(data["alphabet"]),
            tuple(tuple(row) for row in data["delta"]),
            data.get("initial", 0),
            frozenset(data["finals"]),
        )
        if dfa.n_states != data["states"]:
            raise ValueError("'states' does not match the number of delta rows")
        return dfa

    def to_dot(self, name: str = "dfa") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point];']
        for q in range(self.n_states):
            shape = "doublecircle" if q in self.finals else "circle"
            lines.append(f'  {q} [shape={shape}];')
        lines.append(f"  __start -> {self.initial};")
        edges: dict[tuple[int, int], list[str]] = {}
        for q, row in enumerate(self.delta):
            for a, r in zip(self.alphabet, row):
                edges.setdefault((q, r), []).append(a)
        for (q, r), labels in edges.items():
            lines.append(f'  {q} -> {r} [label="{",".join(labels)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def determinize(nfa: Nfa, cap: int | None = None) -> Dfa:
    """Subset construction restricted to reachable subsets (the empty subset is the sink)."""
    cap = state_cap() if cap is None else cap
    succ = nfa.successors()
    start = frozenset(nfa.initials)
    index = {start: 0}
    order = [start]
    delta: list[tuple[int, ...]] = []
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for a in nfa.alphabet:
            target = frozenset(q for p in subset for q in succ.get((p, a), ()))
            if target not in index:
                if len(order) >= cap:
                    raise CapExceeded("determinized state count", cap)
                index[target] = len(order)
                order.append(target)
            row.append(index[target])
        delta.append(tuple(row))
        i += 1
    finals = frozenset(j for j, s in enumerate(order) if s & nfa.finals)
    return Dfa(nfa.alphabet, tuple(delta), 0, finals)


def _reachable(dfa: Dfa) -> list[int]:
    seen = {dfa.initial}
    queue = deque([dfa.initial])
    order = []
    while queue:
        q = queue.popleft()
        order.append(q)
        for r in dfa.delta[q]:
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return order


def _hopcroft(dfa: Dfa, states: Sequence[int]) -> dict[int, int]:
    """Coarsest partition of ``states`` compatible with finality; returns state -> block id."""
    k = len(dfa.alphabet)
    inverse: dict[tuple[int, int], list[int]] = {}
    for q in states:
        for i, r in enumerate(dfa.delta[q]):
            inverse.setdefault((r, i), []).append(q)

    finals = [q for q in states if q in dfa.finals]
    others = [q for q in states if q not in dfa.finals]
    blocks: list[set[int]] = [set(b) for b in (finals, others) if b]
    block_of = {q: b for b, members in enumerate(blocks) for q in members}
    worklist = deque()
    in_work: set[tuple[int, int]] = set()
    seed = min(range(len(blocks)), key=lambda b: len(blocks[b]))
    for i in range(k):
        worklist.append((seed, i))
        in_work.add((seed, i))

    while worklist:
        splitter, i = worklist.popleft()
        in_work.discard((splitter, i))
        predecessors = {p for r in blocks[splitter] for p in inverse.get((r, i), ())}
        touched: dict[int, set[int]] = {}
        for p in predecessors:
            touched.setdefault(block_of[p], set()).add(p)
        for b, hit in touched.items():
            if len(hit) == len(blocks[b]):
                continue
            rest = blocks[b] - hit
            blocks[b] = hit
            new = len(blocks)
            blocks.append(rest)
            for q in rest:
                block_of[q] = new
            for j in range(k):
                if (b, j) in in_work:
                    worklist.append((new, j))
                    in_work.add((new, j))
                else:
                    smaller = b if len(hit) <= len(rest) else new
                    worklist.append((smaller, j))
                    in_work.add((smaller, j))
    return block_of


def minimize(dfa: Dfa) -> Dfa:
    """Canonical minimal DFA: trim, Hopcroft refinement, breadth-first renumbering."""
    states = _reachable(dfa)
    block_of = _hopcroft(dfa, states)
    start = block_of[dfa.initial]
    rep = {}
    for q in states:
        rep.setdefault(block_of[q], q)
    number = {start: 0}
    queue = deque([start])
    delta = []
    finals = set()
    while queue:
        b = queue.popleft()
        q = rep[b]
        if q in dfa.finals:
            finals.add(number[b])
        row = []
        for r in dfa.delta[q]:
            c = block_of[r]
            if c not in number:
                number[c] = len(number)
                queue.append(c)
            row.append(number[c])
        delta.append(tuple(row))
    return Dfa(dfa.alphabet, tuple(delta), 0, frozenset(finals))


def empty_dfa(alphabet: Alphabet | Iterable[str]) -> Dfa:
    alphabet = as_alphabet(alphabet)
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset())


def universal_dfa(alphabet: Alphabet | Iterable[str]) -> Dfa:
    alphabet = as_alphabet(alphabet)
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset({0}))


def extend_alphabet(dfa: Dfa, alphabet: Alphabet) -> Dfa:
    """Same language viewed over a larger alphabet; new symbols lead to a sink."""
    if alphabet.symbols == dfa.alphabet.symbols:
        return dfa
    missing = [a for a in dfa.alphabet if a not in alphabet]
    if missing:
        raise AlphabetMismatch(f"{alphabet} does not contain {missing}")
    sink = dfa.n_states
    delta = []
    for row in dfa.delta + ((sink,) * len(dfa.alphabet),):
        delta.append(tuple(
            row[dfa.alphabet.index(a)] if a in dfa.alphabet else sink for a in alphabet
        ))
    return minimize(Dfa(alphabet, tuple(delta), dfa.initial, dfa.finals))


@dataclass(frozen=True)
class Morphism:
    """Free-monoid morphism given by the images of the source letters."""

    source: Alphabet
    target: Alphabet
    images: tuple[tuple[str, str], ...]

    def __init__(self, source, target, images: Mapping[str, str]):
        source, target = as_alphabet(source), as_alphabet(target)
        if set(images) != set(source.symbols):
            raise ValueError("morphism must give an image for every source letter")
        for a, w in images.items():
            if any(c not in target for c in w):
                raise ValueError(f"image {w!r} of {a!r} is not a word over {target}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", tuple((a, images[a]) for a in source))

    def __call__(self, word: str) -> str:
        image = dict(self.images)
        return "".join(image[a] for a in word)

    def image(self, letter: str) -> str:
        return dict(self.images)[letter]

    @property
    def kind(self) -> str:
        lengths = {len(w) for _, w in self.images}
        if lengths <= {1}:
            return "length-preserving"
        if lengths <= {0, 1}:
            return "length-decreasing"
        return "general"

    def require(self, kind: str) -> None:
        allowed = {
            "length-preserving": {"length-preserving"},
            "length-decreasing": {"length-preserving", "length-decreasing"},
        }[kind]
        if self.kind not in allowed:
            raise MorphismKindError(f"morphism is {self.kind}, expected {kind}")
