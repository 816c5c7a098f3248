"""Regular expressions in the notation used for languages over small alphabets.

Grammar (whitespace ignored)::

    expr   := term ('+' term)*
    term   := factor factor*                 juxtaposition is concatenation
    factor := atom ('*' | '^' digits)*
    atom   := '0' | '1' | symbol | '(' expr ')'

``0`` is the empty language and ``1`` the empty word. ``e^k`` abbreviates the
k-fold concatenation of ``e`` (``e^0`` is ``1``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .automata import Alphabet, Dfa, Nfa, as_alphabet, determinize, minimize
from .errors import RegexSyntaxError

RESERVED = set("01+*^()")


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Symbol:
    symbol: str


@dataclass(frozen=True)
class Union_:
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Concat:
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Star:
    inner: Regex


@dataclass(frozen=True)
class Power:
    inner: Regex
    k: int


Regex = Union[Empty, Epsilon, Symbol, Union_, Concat, Star, Power]


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.tokens = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.pos = 0
        self.text = text
        self.alphabet = alphabet

    def peek(self) -> str | None:
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else None

    def where(self) -> int:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else len(self.text)

    def take(self) -> str:
        c = self.tokens[self.pos][1]
        self.pos += 1
        return c

    def parse(self) -> Regex:
        node = self.expr()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.where())
        return node

    def expr(self) -> Regex:
        node = self.term()
        while self.peek() == "+":
            self.take()
            node = Union_(node, self.term())
        return node

    def starts_atom(self) -> bool:
        c = self.peek()
        return c is not None and (c in "01(" or c not in RESERVED)

    def term(self) -> Regex:
        if not self.starts_atom():
            found = self.peek()
            raise RegexSyntaxError(
                "expected an expression" if found is None else f"unexpected {found!r}",
                self.where(),
            )
        node = self.factor()
        while self.starts_atom():
            node = Concat(node, self.factor())
        return node

    def factor(self) -> Regex:
        node = self.atom()
        while self.peek() in ("*", "^"):
            if self.take() == "*":
                node = Star(node)
                continue
            start = self.where()
            digits = ""
            last = None
            # exponent digits must be contiguous: "a^2 1" is a^2 followed by 1
            while self.peek() is not None and self.peek().isdigit() and (
                last is None or self.where() == last + 1
            ):
                last = self.where()
                digits += self.take()
            if not digits:
                raise RegexSyntaxError("expected an exponent after '^'", start)
            node = Power(node, int(digits))
        return node

    def atom(self) -> Regex:
        at = self.where()
        c = self.take()
        if c == "0":
            return Empty()
        if c == "1":
            return Epsilon()
        if c == "(":
            node = self.expr()
            if self.peek() != ")":
                raise RegexSyntaxError("expected ')'", self.where())
            self.take()
            return node
        if c not in self.alphabet:
            raise RegexSyntaxError(f"symbol {c!r} not in alphabet {''.join(self.alphabet)!r}", at)
        return Symbol(c)


def parse_regex(text: str, alphabet: Alphabet | Iterable[str]) -> Regex:
    alphabet = as_alphabet(alphabet)
    clash = RESERVED & set(alphabet.symbols)
    if clash:
        raise ValueError(f"alphabet uses reserved characters {sorted(clash)}")
    return _Parser(text, alphabet).parse()


def _expand(node: Regex) -> Regex:
    """Rewrite powers as concatenations."""
    if isinstance(node, Power):
        inner = _expand(node.inner)
        if node.k == 0:
            return Epsilon()
        out = inner
        for _ in range(node.k - 1):
            out = Concat(out, inner)
        return out
    if isinstance(node, (Union_, Concat)):
        return type(node)(_expand(node.left), _expand(node.right))
    if isinstance(node, Star):
        return Star(_expand(node.inner))
    return node


def to_nfa(node: Regex, alphabet: Alphabet | Iterable[str]) -> Nfa:
    """Glushkov (position) automaton: state 0 is initial, state i >= 1 is position i."""
    alphabet = as_alphabet(alphabet)
    symbols: list[str] = []
    follow: dict[int, set[int]] = {}

    # Returns (nullable, first, last) with positions numbered from 1.
    def walk(n):
        if isinstance(n, Empty):
            return False, set(), set()
        if isinstance(n, Epsilon):
            return True, set(), set()
        if isinstance(n, Symbol):
            symbols.append(n.symbol)
            p = len(symbols)
            follow[p] = set()
            return False, {p}, {p}
        if isinstance(n, Union_):
            n1, f1, l1 = walk(n.left)
            n2, f2, l2 = walk(n.right)
            return n1 or n2, f1 | f2, l1 | l2
        if isinstance(n, Concat):
            n1, f1, l1 = walk(n.left)
            n2, f2, l2 = walk(n.right)
            for p in l1:
                follow[p] |= f2
            return n1 and n2, f1 | f2 if n1 else f1, l1 | l2 if n2 else l2
        if isinstance(n, Star):
            _, f, l = walk(n.inner)
            for p in l:
                follow[p] |= f
            return True, f, l
        raise TypeError(f"not a regex node: {n!r}")

    nullable, first, last = walk(_expand(node))
    transitions = {(0, symbols[p - 1], p) for p in first}
    transitions |= {(p, symbols[q - 1], q) for p, qs in follow.items() for q in qs}
    finals = set(last) | ({0} if nullable else set())
    return Nfa(len(symbols) + 1, alphabet, frozenset(transitions), frozenset({0}), frozenset(finals))


def compile_regex(node: Regex | str, alphabet: Alphabet | Iterable[str], cap: int | None = None) -> Dfa:
    """Canonical minimal DFA of a regex (given as an AST or as text)."""
    alphabet = as_alphabet(alphabet)
    if isinstance(node, str):
        node = parse_regex(node, alphabet)
    return minimize(determinize(to_nfa(node, alphabet), cap))


_PRECEDENCE = {Union_: 0, Concat: 1}


def to_text(node: Regex) -> str:
    """Render an AST back into the input grammar with minimal parentheses."""

    def go(n, level):
        if isinstance(n, Empty):
            return "0"
        if isinstance(n, Epsilon):
            return "1"
        if isinstance(n, Symbol):
            return n.symbol
        if isinstance(n, Union_):
            s = f"{go(n.left, 0)} + {go(n.right, 0)}"
            return f"({s})" if level > 0 else s
        if isinstance(n, Concat):
            s = f"{go(n.left, 1)}{go(n.right, 1)}"
            return f"({s})" if level > 1 else s
        if isinstance(n, Star):
            return f"{go(n.inner, 2)}*"
        if isinstance(n, Power):
            return f"{go(n.inner, 2)}^{n.k}"
        raise TypeError(n)

    return go(node, 0)
