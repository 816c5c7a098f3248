import random
import re

import pytest
from hypothesis import given, strategies as st

from synmon import Alphabet, RegexSyntaxError, compile_regex, parse_regex
from synmon.languages import to_regex
from synmon.regex import Concat, Epsilon, Power, Star, Symbol, Union_, to_text
from synmon.reproduce import _random_regex

from conftest import all_words, dfas


def test_parse_union_of_symbol_and_power_star():
    node = parse_regex("a + a^6 a*", "a")
    assert node == Union_(Symbol("a"), Concat(Power(Symbol("a"), 6), Star(Symbol("a"))))


def test_parse_epsilon():
    assert parse_regex("1", "a") == Epsilon()


def test_parse_nested_tail_cycle():
    node = parse_regex("a + (a^3 + a^4)(a^7)*", "a")
    assert isinstance(node, Union_)
    assert isinstance(node.right, Concat)
    assert isinstance(node.right.left, Union_) and isinstance(node.right.right, Star)


@pytest.mark.parametrize("text, pos", [("a +", 3), ("(a", 2), ("a)", 1), ("a^", 2), ("*a", 0)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(RegexSyntaxError) as info:
        parse_regex(text, "a")
    assert info.value.position == pos


def test_symbol_outside_alphabet():
    with pytest.raises(RegexSyntaxError):
        parse_regex("ab", "a")


def test_exponent_digits_must_be_adjacent():
    # "a^2 1" is a^2 followed by the empty word, not a^21
    assert compile_regex("a^2 1", "a") == compile_regex("aa", "a")


def test_tail_cycle_automaton():
    d = compile_regex("a + (a^3+a^4)(a^7)*", "a")
    assert d.n_states == 9
    assert [row[0] for row in d.delta] == [1, 2, 3, 4, 5, 6, 7, 8, 2]
    assert d.finals == {1, 3, 4} and d.initial == 0


def test_empty_language_has_one_state():
    d = compile_regex("0", "ab")
    assert d.n_states == 1 and not d.finals


def test_chain_with_loop():
    d = compile_regex("a + a^6 a*", "a")
    assert [row[0] for row in d.delta] == [1, 2, 3, 4, 5, 6, 6]
    assert d.finals == {1, 6}
    assert [k for k in range(11) if d.accepts("a" * k)] == [1, 6, 7, 8, 9, 10]


@given(st.integers(0, 10_000))
def test_compile_agrees_with_python_re(seed):
    rng = random.Random(seed)
    text, pattern = _random_regex(rng, "ab", 4)
    d = compile_regex(text, "ab")
    rx = re.compile(pattern)
    assert all(d.accepts(w) == (rx.fullmatch(w) is not None) for w in all_words("ab", 6))


@given(st.integers(0, 10_000))
def test_to_text_reparses_to_same_language(seed):
    text, _ = _random_regex(random.Random(seed), "ab", 4)
    node = parse_regex(text, "ab")
    assert compile_regex(to_text(node), "ab") == compile_regex(node, "ab")


@given(dfas("ab", 4))
def test_to_regex_round_trip(d):
    assert compile_regex(to_regex(d), d.alphabet) == d


@given(dfas("a", 6))
def test_to_regex_unary_round_trip(d):
    assert compile_regex(to_regex(d), "a") == d


def test_whitespace_is_ignored():
    assert compile_regex(" ( a + b ) * ", "ab") == compile_regex("(a+b)*", Alphabet("ab"))
