import json

import pytest
from hypothesis import given

from synmon import Alphabet, CapExceeded, Dfa, Morphism, MorphismKindError, Nfa, determinize, minimize
from synmon.automata import empty_dfa, extend_alphabet, universal_dfa

from conftest import all_words, dfas


def test_alphabet_rejects_duplicates_and_long_symbols():
    with pytest.raises(ValueError):
        Alphabet("aa")
    with pytest.raises(ValueError):
        Alphabet(["ab"])


def test_words_are_shortlex():
    assert list(Alphabet("ab").words(2)) == ["", "a", "b", "aa", "ab", "ba", "bb"]


@given(dfas("ab", 5))
def test_minimize_is_idempotent(d):
    assert minimize(d) == d


@given(dfas("ab", 5))
def test_json_round_trip(d):
    assert Dfa.from_json(json.dumps(d.to_json())) == d


def test_json_rejects_wrong_state_count():
    data = empty_dfa("a").to_json()
    data["states"] = 2
    with pytest.raises(ValueError):
        Dfa.from_json(data)


def test_delta_must_be_total():
    with pytest.raises(ValueError):
        Dfa(Alphabet("ab"), ((0,),), 0, frozenset())


def test_minimize_merges_equivalent_states():
    # two accepting states with identical futures
    d = Dfa(Alphabet("a"), ((1,), (2,), (1,)), 0, frozenset({1, 2}))
    assert minimize(d).n_states == 2


def test_unreachable_states_are_dropped():
    d = Dfa(Alphabet("a"), ((0,), (1,)), 0, frozenset({1}))
    assert minimize(d) == empty_dfa("a")


def test_determinize_cap():
    # (a+b)*a(a+b)^5 needs 2^6 subsets
    n = 7
    transitions = {(0, "a", 0), (0, "b", 0), (0, "a", 1)}
    transitions |= {(i, c, i + 1) for i in range(1, n - 1) for c in "ab"}
    nfa = Nfa(n, Alphabet("ab"), frozenset(transitions), frozenset({0}), frozenset({n - 1}))
    assert minimize(determinize(nfa)).n_states == 64
    with pytest.raises(CapExceeded):
        determinize(nfa, cap=10)


def test_state_cap_env(monkeypatch):
    from synmon import compile_regex
    monkeypatch.setenv("SYNMON_STATE_CAP", "3")
    with pytest.raises(CapExceeded):
        compile_regex("(a+b)*a(a+b)(a+b)", "ab")


def test_extend_alphabet_sends_new_letters_to_sink():
    d = extend_alphabet(universal_dfa("a"), Alphabet("ab"))
    assert d.accepts("aaa") and not d.accepts("ab")


def test_dot_output_marks_finals_and_start():
    dot = minimize(Dfa(Alphabet("a"), ((1,), (1,)), 0, frozenset({1}))).to_dot()
    assert "doublecircle" in dot and "__start -> 0" in dot


@pytest.mark.parametrize("images, kind", [
    ({"a": "a", "b": "a"}, "length-preserving"),
    ({"a": "a", "b": ""}, "length-decreasing"),
    ({"a": "aa", "b": "a"}, "general"),
])
def test_morphism_kind(images, kind):
    phi = Morphism("ab", "a", images)
    assert phi.kind == kind
    assert phi("ab") == images["a"] + images["b"]


def test_morphism_require():
    with pytest.raises(MorphismKindError):
        Morphism("a", "a", {"a": ""}).require("length-preserving")
    Morphism("a", "a", {"a": ""}).require("length-decreasing")


def test_morphism_needs_every_letter():
    with pytest.raises(ValueError):
        Morphism("ab", "a", {"a": "a"})


def test_nfa_accepts():
    nfa = Nfa(2, Alphabet("a"), frozenset({(0, "a", 1), (1, "a", 0)}), frozenset({0}), frozenset({0}))
    assert [w for w in all_words("a", 4) if nfa.accepts(w)] == ["", "aa", "aaaa"]
