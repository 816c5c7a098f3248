import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from synmon import Alphabet, Dfa, compile_regex, minimize
from synmon.unary import EPSet, canonical

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def dfas(draw, alphabet="ab", max_states=4):
    alphabet = Alphabet(alphabet)
    n = draw(st.integers(1, max_states))
    delta = tuple(tuple(draw(st.integers(0, n - 1)) for _ in alphabet) for _ in range(n))
    finals = frozenset(q for q in range(n) if draw(st.booleans()))
    return minimize(Dfa(alphabet, delta, 0, finals))


@st.composite
def epsets(draw, max_threshold=5, max_period=4):
    t = draw(st.integers(0, max_threshold))
    p = draw(st.integers(1, max_period))
    exceptions = draw(st.frozensets(st.integers(0, max(t - 1, 0)), max_size=t)) if t else frozenset()
    residues = draw(st.frozensets(st.integers(0, p - 1)))
    return canonical(EPSet(exceptions, t, p, residues))


words = st.text(alphabet="ab", max_size=4)


def unary(text):
    return compile_regex(text, "a")


def exps(d, upto=30):
    """Exponents k <= upto with a^k accepted."""
    return {k for k in range(upto + 1) if d.accepts("a" * k)}


def all_words(alphabet, n):
    return list(Alphabet(alphabet).words(n))


@pytest.fixture
def lang():
    return compile_regex
