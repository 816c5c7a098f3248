"""Seeded random instances for property checks."""
from __future__ import annotations

import random

from .automata import Dfa, Morphism, as_alphabet, minimize
from .unary import EPSet, canonical


def random_dfa(rng: random.Random, alphabet, n_states: int = 4, p_final: float = 0.4) -> Dfa:
    alphabet = as_alphabet(alphabet)
    delta = tuple(tuple(rng.randrange(n_states) for _ in alphabet) for _ in range(n_states))
    finals = frozenset(q for q in range(n_states) if rng.random() < p_final)
    return minimize(Dfa(alphabet, delta, 0, finals))


def random_epset(rng: random.Random, max_threshold: int = 5, max_period: int = 4) -> EPSet:
    t = rng.randint(0, max_threshold)
    p = rng.randint(1, max_period)
    exceptions = frozenset(n for n in range(t) if rng.random() < 0.5)
    residues = frozenset(r for r in range(p) if rng.random() < 0.5)
    return canonical(EPSet(exceptions, t, p, residues))


def random_morphism(rng: random.Random, source, target, max_len: int = 2,
                    allow_empty: bool = True) -> Morphism:
    source, target = as_alphabet(source), as_alphabet(target)
    low = 0 if allow_empty else 1
    images = {a: "".join(rng.choice(target.symbols) for _ in range(rng.randint(low, max_len)))
              for a in source}
    return Morphism(source, target, images)


def random_letter_map(rng: random.Random, source, target) -> Morphism:
    source, target = as_alphabet(source), as_alphabet(target)
    return Morphism(source, target, {a: rng.choice(target.symbols) for a in source})


__all__ = ["random_dfa", "random_epset", "random_morphism", "random_letter_map"]
