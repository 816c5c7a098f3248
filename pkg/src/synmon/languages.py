"""Language-level operations on canonical DFAs."""
from __future__ import annotations

from collections import deque
from typing import Iterable

from .automata import (
    Alphabet,
    Dfa,
    Morphism,
    Nfa,
    as_alphabet,
    determinize,
    extend_alphabet,
    minimize,
)
from . import regex as R
from .errors import AlphabetMismatch, CapExceeded, state_cap

BOOLEAN_OPS = ("union", "intersect", "difference", "complement")


def _product(d1: Dfa, d2: Dfa, accept, cap: int | None = None) -> Dfa:
    cap = state_cap() if cap is None else cap
    start = (d1.initial, d2.initial)
    index = {start: 0}
    order = [start]
    delta = []
    i = 0
    while i < len(order):
        p, q = order[i]
        row = []
        for r1, r2 in zip(d1.delta[p], d2.delta[q]):
            if (r1, r2) not in index:
                if len(order) >= cap:
                    raise CapExceeded("product state count", cap)
                index[(r1, r2)] = len(order)
                order.append((r1, r2))
            row.append(index[(r1, r2)])
        delta.append(tuple(row))
        i += 1
    finals = frozenset(
        j for j, (p, q) in enumerate(order) if accept(p in d1.finals, q in d2.finals)
    )
    return minimize(Dfa(d1.alphabet, tuple(delta), 0, finals))


def _same_alphabet(d1: Dfa, d2: Dfa) -> None:
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatch(f"{d1.alphabet} != {d2.alphabet}")


def complement(d: Dfa) -> Dfa:
    return minimize(d.with_finals(set(range(d.n_states)) - d.finals))


def union(d1: Dfa, d2: Dfa) -> Dfa:
    _same_alphabet(d1, d2)
    return _product(d1, d2, lambda x, y: x or y)


def intersect(d1: Dfa, d2: Dfa) -> Dfa:
    _same_alphabet(d1, d2)
    return _product(d1, d2, lambda x, y: x and y)


def difference(d1: Dfa, d2: Dfa) -> Dfa:
    _same_alphabet(d1, d2)
    return _product(d1, d2, lambda x, y: x and not y)


def boolean(op: str, d1: Dfa, d2: Dfa | None = None) -> Dfa:
    if op == "complement":
        if d2 is not None:
            raise TypeError("complement takes a single language")
        return complement(d1)
    if d2 is None:
        raise TypeError(f"{op} takes two languages")
    funcs = {"union": union, "intersect": intersect, "difference": difference}
    if op not in funcs:
        raise ValueError(f"unknown boolean operation {op!r}")
    return funcs[op](d1, d2)


def quotient(side: str, u: str, d: Dfa) -> Dfa:
    """Left quotient u^-1 L = {w : uw in L} or right quotient L u^-1 = {w : wu in L}."""
    if any(a not in d.alphabet for a in u):
        raise AlphabetMismatch(f"word {u!r} is not over {d.alphabet}")
    if side == "left":
        return minimize(d.with_initial(d.step(d.initial, u)))
    if side == "right":
        return minimize(d.with_finals(q for q in range(d.n_states) if d.step(q, u) in d.finals))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def left_quotient(u: str, d: Dfa) -> Dfa:
    return quotient("left", u, d)


def right_quotient(u: str, d: Dfa) -> Dfa:
    return quotient("right", u, d)


def shuffle(d1: Dfa, d2: Dfa, cap: int | None = None) -> Dfa:
    """All interleavings of a word of L1 with a word of L2, over the union alphabet."""
    alphabet = d1.alphabet.union(d2.alphabet)
    d1, d2 = extend_alphabet(d1, alphabet), extend_alphabet(d2, alphabet)
    n2 = d2.n_states

    def pair(p, q):
        return p * n2 + q

    transitions = set()
    for p in range(d1.n_states):
        for q in range(n2):
            for i, a in enumerate(alphabet):
                transitions.add((pair(p, q), a, pair(d1.delta[p][i], q)))
                transitions.add((pair(p, q), a, pair(p, d2.delta[q][i])))
    finals = {pair(p, q) for p in d1.finals for q in d2.finals}
    nfa = Nfa(d1.n_states * n2, alphabet, frozenset(transitions),
              frozenset({pair(d1.initial, d2.initial)}), frozenset(finals))
    return minimize(determinize(nfa, cap))


def concat(d1: Dfa, d2: Dfa, cap: int | None = None) -> Dfa:
    """Product L1 L2 over the union alphabet."""
    alphabet = d1.alphabet.union(d2.alphabet)
    d1, d2 = extend_alphabet(d1, alphabet), extend_alphabet(d2, alphabet)
    off = d1.n_states
    transitions = set()
    for p, row in enumerate(d1.delta):
        for a, r in zip(alphabet, row):
            transitions.add((p, a, r))
            if r in d1.finals:
                transitions.add((p, a, off + d2.initial))
    for q, row in enumerate(d2.delta):
        for a, r in zip(alphabet, row):
            transitions.add((off + q, a, off + r))
    initials = {d1.initial}
    if d1.initial in d1.finals:
        initials.add(off + d2.initial)
    finals = {off + q for q in d2.finals}
    nfa = Nfa(off + d2.n_states, alphabet, frozenset(transitions),
              frozenset(initials), frozenset(finals))
    return minimize(determinize(nfa, cap))


def power(d: Dfa, k: int) -> Dfa:
    out = minimize(Dfa(d.alphabet, ((1,) * len(d.alphabet), (1,) * len(d.alphabet)), 0, frozenset({0})))
    for _ in range(k):
        out = concat(out, d)
    return out


def rename_image(d: Dfa, phi: Morphism, cap: int | None = None) -> Dfa:
    """Image of L under a length-preserving morphism, as a DFA over the target alphabet."""
    phi.require("length-preserving")
    if phi.source != d.alphabet:
        raise AlphabetMismatch(f"morphism source {phi.source} != {d.alphabet}")
    transitions = frozenset(
        (p, phi.image(a), r) for p, row in enumerate(d.delta) for a, r in zip(d.alphabet, row)
    )
    nfa = Nfa(d.n_states, phi.target, transitions, frozenset({d.initial}), d.finals)
    return minimize(determinize(nfa, cap))


def inverse_morphism(d: Dfa, phi: Morphism) -> Dfa:
    """phi^-1(L) for any morphism phi: A* -> B* with L over B."""
    if phi.target != d.alphabet:
        raise AlphabetMismatch(f"morphism target {phi.target} != {d.alphabet}")
    delta = tuple(
        tuple(d.step(q, phi.image(a)) for a in phi.source) for q in range(d.n_states)
    )
    return minimize(Dfa(phi.source, delta, d.initial, d.finals))


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    _same_alphabet(d1, d2)
    return minimize(d1) == minimize(d2)


def is_empty(d: Dfa) -> bool:
    return not minimize(d).finals


def shortest_word(d: Dfa) -> str | None:
    """Shortlex-least accepted word, or None for the empty language."""
    parent: dict[int, tuple[int, str] | None] = {d.initial: None}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        if q in d.finals:
            word = []
            while parent[q] is not None:
                q, a = parent[q]
                word.append(a)
            return "".join(reversed(word))
        for a, r in zip(d.alphabet, d.delta[q]):
            if r not in parent:
                parent[r] = (q, a)
                queue.append(r)
    return None


def word_dfa(words: Iterable[str], alphabet: Alphabet | Iterable[str]) -> Dfa:
    """Canonical DFA of a finite language."""
    alphabet = as_alphabet(alphabet)
    words = sorted(set(words))
    prefixes = sorted({w[:i] for w in words for i in range(len(w) + 1)}, key=lambda w: (len(w), w))
    index = {p: i for i, p in enumerate(prefixes)}
    sink = len(prefixes)
    delta = [tuple(index.get(p + a, sink) for a in alphabet) for p in prefixes]
    delta.append((sink,) * len(alphabet))
    finals = frozenset(index[w] for w in words)
    return minimize(Dfa(alphabet, tuple(delta), 0, finals))


def _alt(x, y):
    if x is None:
        return y
    if y is None or x == y:
        return x
    return R.Union_(x, y)


def _cat(x, y):
    if x is None or y is None:
        return None
    if isinstance(x, R.Epsilon):
        return y
    if isinstance(y, R.Epsilon):
        return x
    return R.Concat(x, y)


def _star(x):
    if x is None or isinstance(x, R.Epsilon):
        return R.Epsilon()
    return x if isinstance(x, R.Star) else R.Star(x)


def _eliminate(d: Dfa, order: list[int]):
    start, end = "start", "end"
    edges: dict[tuple, object] = {(start, d.initial): R.Epsilon()}
    for q in order:
        for a, r in zip(d.alphabet, d.delta[q]):
            if r in order:
                edges[(q, r)] = _alt(edges.get((q, r)), R.Symbol(a))
        if q in d.finals:
            edges[(q, end)] = R.Epsilon()
    for k in order:
        loop = _star(edges.pop((k, k), None))
        ins = [(i, e) for (i, j), e in edges.items() if j == k]
        outs = [(j, e) for (i, j), e in edges.items() if i == k]
        for i, _ in ins:
            edges.pop((i, k))
        for j, _ in outs:
            edges.pop((k, j))
        for i, ei in ins:
            for j, ej in outs:
                edges[(i, j)] = _alt(edges.get((i, j)), _cat(_cat(ei, loop), ej))
    return edges.get((start, end))


def to_regex(d: Dfa) -> str:
    """A regex for L(d) in the package grammar.

    One-letter languages use the eventually periodic normal form; otherwise
    state elimination is run under a few elimination orders and the shortest
    result is kept.
    """
    from .unary import to_epset

    d = minimize(d)
    if len(d.alphabet) == 1:
        return to_epset(d).to_text(d.alphabet.symbols[0])
    live = {q for q in range(d.n_states) if minimize(d.with_initial(q)).finals}
    if d.initial not in live:
        return "0"
    states = [q for q in range(d.n_states) if q in live]
    degree = {q: sum(r in live for r in d.delta[q]) for q in states}
    orders = [states, states[::-1], sorted(states, key=lambda q: (degree[q], q))]
    texts = []
    for order in orders:
        node = _eliminate(d, order)
        texts.append("0" if node is None else R.to_text(node))
    return min(texts, key=lambda s: (len(s), s))
