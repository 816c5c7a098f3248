"""Golden checks for the worked examples, grouped into numbered criteria.

Each criterion is a function returning a list of :class:`Check`. Values are
asserted exactly as stated; a criterion whose stated value disagrees with the
computation reports a failing check rather than being adjusted.
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .automata import Alphabet, Dfa, Morphism, empty_dfa, extend_alphabet, minimize
from .commutative import ShuffleTerm, decompose_commutative, lattice_closure
from .downset import downset_monoid, quotient_check, u1_down
from .errors import SynmonError
from .ineq import enumerate_power_inequalities, satisfies
from .languages import (
    complement,
    concat,
    difference,
    equivalent,
    intersect,
    inverse_morphism,
    left_quotient,
    rename_image,
    right_quotient,
    shuffle,
    union,
)
from .monoid import OrderedMonoid, isomorphic, syntactic_monoid, transition_monoid, trivial_monoid
from .numsemigroup import generate, satisfied_growth, vs_characterization
from .regex import compile_regex
from .sampling import random_dfa, random_epset, random_letter_map, random_morphism
from .unary import EPSet, from_epset

SEED = 20240601


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool


@dataclass(frozen=True)
class Criterion:
    id: int
    title: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"id": self.id, "title": self.title, "passed": self.passed,
                "checks": [{"label": c.label, "passed": c.passed} for c in self.checks]}


def unary(text: str) -> Dfa:
    return compile_regex(text, "a")


# 1 ------------------------------------------------------------------------

def criterion_1() -> list[Check]:
    data = syntactic_monoid(unary("1 + a"))
    m = data.monoid
    a = data.stamp.image("a")
    zero = [z for z in range(m.n) if all(m.mult[z, x] == z == m.mult[x, z] for x in range(m.n))]
    checks = [Check("three elements", m.n == 3), Check("a^2 is a zero", len(zero) == 1
                                                        and m.product(a, a) == zero[0])]
    if len(zero) == 1:
        z, one = zero[0], m.identity
        checks.append(Check("strict order is {0<a, a<1, 0<1}",
                            m.strict_pairs() == {(z, a), (a, one), (z, one)}))
    return checks


# 2 ------------------------------------------------------------------------

def criterion_2() -> list[Check]:
    data = syntactic_monoid(unary("a + a^6 a*"))
    m = data.monoid
    k = [len(w) for w in data.representatives]  # element i is a^k[i]
    pos = {e: i for i, e in enumerate(k)}
    table_ok = all(k[m.mult[i, j]] == min(k[i] + k[j], 6) for i in range(m.n) for j in range(m.n))
    covers = {(k[x], k[y]) for x, y in m.covers()}

    def le(x, y):
        return m.le(pos[x], pos[y])

    return [
        Check("seven elements", m.n == 7 and sorted(k) == list(range(7))),
        Check("xy = min(x+y, 6)", table_ok),
        Check("idempotents {0, 6}", {k[e] for e in m.idempotents()} == {0, 6}),
        Check("Hasse diagram has the six drawn edges",
              covers == {(2, 3), (3, 4), (4, 5), (5, 6), (0, 5), (1, 6)}),
        Check("1 <= 6 and 0 <= 5", le(1, 6) and le(0, 5)),
        Check("not 1 <= 5 and not 6 <= 1", not le(1, 5) and not le(6, 1)),
    ]


# 3 ------------------------------------------------------------------------

TAIL_CYCLE = "a + (a^3 + a^4)(a^7)*"


def criterion_3() -> list[Check]:
    d = unary(TAIL_CYCLE)
    expected = Dfa(Alphabet("a"), tuple((i + 1,) for i in range(8)) + ((2,),), 0, frozenset({1, 3, 4}))
    data = syntactic_monoid(d)
    m = data.monoid
    return [
        Check("minimal DFA is the 9-state tail-cycle with finals {1,3,4}", d == expected),
        Check("a^9 = a^2", satisfies(m, "x^9 = x^2")),
        Check("syntactic order is equality", bool((m.leq == np.eye(m.n, dtype=bool)).all())),
    ]


# 4 ------------------------------------------------------------------------

def criterion_4() -> list[Check]:
    gen = unary("1 + a")
    family = lattice_closure([gen])
    expected = {unary(t) for t in ("0", "1", "1 + a", "a*")}
    m = syntactic_monoid(gen).monoid
    return [
        Check("exactly 4 members", len(family) == 4),
        Check("members are {0, 1, 1+a, a*}", set(family) == expected),
        Check("satisfies xy = yx, x <= 1, x^2 <= x^3",
              all(satisfies(m, s) for s in ("xy = yx", "x <= 1", "x^2 <= x^3"))),
        Check("fails 1 <= x^q for q in 1..7", not any(satisfies(m, f"1 <= x^{q}") for q in range(1, 8))),
        Check("fails x <= x^q for q in 2..7", not any(satisfies(m, f"x <= x^{q}") for q in range(2, 8))),
    ]


# 5 ------------------------------------------------------------------------

def listed_family_6_2() -> list[Dfa]:
    """The twenty languages as listed, before identifying equal ones."""
    texts = ["0"]
    texts += [f"a^{i} a*" for i in range(0, 7)]
    texts += [f"1 + a^{i} a*" for i in range(1, 6)]
    texts += [f"a + a^{i} a*" for i in range(3, 7)]
    texts += [f"1 + a + a^{i} a*" for i in range(3, 6)]
    return [unary(t) for t in texts]


def criterion_5() -> list[Check]:
    gen = unary("a + a^6 a*")
    family = lattice_closure([gen])
    listed = listed_family_6_2()
    m = syntactic_monoid(gen).monoid
    p0 = {(p, q) for p, q in enumerate_power_inequalities(m, 7) if p == 0}
    return [
        Check("exactly 20 members", len(family) == 20),
        Check("members are the listed languages", set(family) == set(listed)),
        Check("satisfies xy = yx, 1 <= x^5, x^2 <= x^3, x^6 = x^7",
              all(satisfies(m, s) for s in ("xy = yx", "1 <= x^5", "x^2 <= x^3", "x^6 = x^7"))),
        Check("p = 0 rows are {(0,0),(0,5),(0,6),(0,7)}", p0 == {(0, 0), (0, 5), (0, 6), (0, 7)}),
    ]


# 6 ------------------------------------------------------------------------

def _words_text(exps) -> str:
    return " + ".join(f"a^{e}" for e in sorted(exps)) or "0"


def shifted_family_member(n: int, F) -> Dfa:
    """a^n(F + a^5 a*) built from its regex."""
    return unary(f"a^{n}({_words_text(F)} + a^5 a*)")


def criterion_6(seed: int = SEED) -> list[Check]:
    rng = random.Random(seed)
    ok = dict.fromkeys(["union", "product", "normal product", "brute", "formula"], True)
    tail = unary("a^5 a*")
    for n, m in itertools.product(range(4), repeat=2):
        for _ in range(10):
            F = {f for f in range(5) if rng.random() < 0.5}
            G = {g for g in range(5) if rng.random() < 0.5}
            X, Y = shifted_family_member(n, F), shifted_family_member(m, G)
            (lo, A), (hi, B) = sorted([(n, F), (m, G)], key=lambda t: t[0])
            merged = set(A) | {hi - lo + g for g in B}
            ok["union"] &= equivalent(union(X, Y), unary(f"a^{lo}({_words_text(merged)} + a^5 a*)"))
            sums = {f + g for f in F for g in G}
            ok["product"] &= equivalent(concat(X, Y), unary(f"a^{n + m}({_words_text(sums)} + a^5 a*)"))
            # same identity once both sides are in the form with 0 in F and 0 in G
            F0, G0 = F | {0}, G | {0}
            sums0 = {f + g for f in F0 for g in G0}
            ok["normal product"] &= equivalent(
                concat(shifted_family_member(n, F0), shifted_family_member(m, G0)),
                unary(f"a^{n + m}({_words_text(sums0)} + a^5 a*)"))

            inside = {k for k in range(40) if (k - n in F or k >= n + 5) and (k - m in G or k >= m + 5)}
            got = intersect(X, Y)
            ok["brute"] &= {k for k in range(40) if got.accepts("a" * k)} == inside
            # a^hi(((a^(hi-lo))^-1 (A + a^5a*)) ∩ B + a^5a*)
            q = left_quotient("a" * (hi - lo), unary(f"{_words_text(A)} + a^5 a*"))
            inner = union(intersect(q, unary(_words_text(B))), tail)
            ok["formula"] &= equivalent(got, concat(unary(f"a^{hi}"), inner))
    return [
        Check("union closed form (160 random pairs)", ok["union"]),
        Check("product closed form (160 random pairs)", ok["product"]),
        Check("product closed form with 0 in F and 0 in G", ok["normal product"]),
        Check("intersection equals brute-force intersection", ok["brute"]),
        Check("intersection equals the rebalanced closed form", ok["formula"]),
    ]


# 7 ------------------------------------------------------------------------

QUOTIENT_FINALS = {
    1: {0, 2, 3}, 2: {1, 2, 8}, 3: {0, 1, 7, 8}, 4: {0, 6, 7},
    5: {5, 6}, 6: {4, 5}, 7: {3, 4}, 8: {2, 3},
}
DISPLAYED_INTERSECTIONS = [
    ({0}, {0, 2, 3}, {0, 6, 7}), ({1}, {1, 3, 4}, {1, 2, 8}),
    ({2}, {0, 2, 3}, {1, 2, 8}), ({3}, {1, 3, 4}, {0, 2, 3}),
    ({4}, {3, 4}, {4, 5}), ({5}, {4, 5}, {5, 6}),
    ({6}, {5, 6}, {0, 6, 7}), ({0, 7}, {0, 6, 7}, {0, 1, 7, 8}),
    ({1, 8}, {1, 2, 8}, {0, 1, 7, 8}),
]


def upset_condition(F) -> bool:
    return (7 not in F or 0 in F) and (8 not in F or 1 in F)


def criterion_7() -> list[Check]:
    d = unary(TAIL_CYCLE)

    def lang(F):
        return minimize(d.with_finals(F))

    quotients_ok = all(left_quotient("a" * j, d) == lang(F) for j, F in QUOTIENT_FINALS.items())
    inter_ok = all(intersect(lang(A), lang(B)) == lang(C) for C, A, B in DISPLAYED_INTERSECTIONS)
    family = lattice_closure([d])
    members = set(family)
    predicted = {lang(F) for r in range(10) for F in itertools.combinations(range(9), r)
                 if upset_condition(F)}
    m = syntactic_monoid(d).monoid
    power = downset_monoid(transition_monoid(d).monoid, include_empty=False)
    return [
        Check("eight quotient final-state sets", quotients_ok),
        Check("nine displayed intersections", inter_ok),
        Check("closure has exactly 288 members", len(family) == 288),
        Check("closure is the set of final-state choices meeting the upset condition",
              members == predicted),
        Check("closure is closed under complement", all(complement(x) in members for x in members)),
        Check("x^2 = x^9", satisfies(m, "x^2 = x^9")),
        Check("power monoid has 511 elements", power.n == 511),
        Check("power monoid satisfies xy = yx and x^w = x^(w+7)",
              satisfies(power, "xy = yx") and satisfies(power, "x^w = x^(w+7)")),
    ]


# 8 ------------------------------------------------------------------------

def criterion_8() -> list[Check]:
    u1 = u1_down()
    examples = [trivial_monoid(), syntactic_monoid(unary("1 + a")).monoid,
                syntactic_monoid(unary("a + a^6 a*")).monoid]
    return [
        Check("P0↓(trivial) ≅ U1↓", isomorphic(downset_monoid(trivial_monoid(), include_empty=True), u1)),
        Check("U1↓ satisfies xy = yx, x = x^2, x <= 1",
              all(satisfies(u1, s) for s in ("xy = yx", "x = x^2", "x <= 1"))),
        Check("quotient_check on the three example monoids", all(quotient_check(m) for m in examples)),
    ]


# 9 ------------------------------------------------------------------------

def _subsets(universe):
    return [frozenset(c) for r in range(len(universe) + 1) for c in itertools.combinations(universe, r)]


def criterion_9() -> list[Check]:
    universe = range(1, 7)
    mismatches = 0
    for S in _subsets(universe):
        if not S:
            continue
        try:
            vs_characterization(S, 12)
        except AssertionError:
            mismatches += 1

    divisibility = all(
        dict(satisfied_growth([n], 8))[m] == (m % n == 0)
        for n in range(1, 9) for m in range(0, 9)
    )

    rows = {S: frozenset(m for m, ok in satisfied_growth(S, 12) if ok) for S in _subsets(universe)}
    corollary = True
    for S, T in itertools.product(rows, repeat=2):
        gs, gt = generate(S), generate(T)
        same_prefix = gs.members(12) == gt.members(12)
        same_semigroup = gs == gt
        corollary &= (rows[S] == rows[T]) == same_prefix == same_semigroup
    return [
        Check("V_S agrees with <S> for all nonempty S ⊆ {1..6}, m <= 12", mismatches == 0),
        Check("x <= x^(m+1) on a(a^n)* iff n | m, n, m <= 8", divisibility),
        Check("equal inequality sets iff equal semigroups, S, T ⊆ {1..6}", corollary),
    ]


# 10 -----------------------------------------------------------------------

def _unary_on(letter: str, e: EPSet, alphabet) -> Dfa:
    return extend_alphabet(from_epset(e, letter), Alphabet(alphabet))


def shuffle_via_renaming(L0: Dfa, L1: Dfa) -> Dfa:
    """π(π0⁻¹(L0) ∩ π1⁻¹(L1)) with B = A × {0, 1}; copy 1 uses upper-case letters."""
    A = L0.alphabet
    upper = {a: a.upper() for a in A}
    B = Alphabet(tuple(A) + tuple(upper[a] for a in A))
    pi0 = Morphism(B, A, {**{a: a for a in A}, **{upper[a]: "" for a in A}})
    pi1 = Morphism(B, A, {**{a: "" for a in A}, **{upper[a]: a for a in A}})
    pi = Morphism(B, A, {**{a: a for a in A}, **{upper[a]: a for a in A}})
    return rename_image(intersect(inverse_morphism(L0, pi0), inverse_morphism(L1, pi1)), pi)


def _random_regex(rng: random.Random, alphabet: str, depth: int) -> tuple[str, str]:
    """A random expression as (package syntax, Python ``re`` syntax)."""
    if depth == 0 or rng.random() < 0.25:
        choice = rng.random()
        if choice < 0.08:
            return "0", "(?!)"
        if choice < 0.16:
            return "1", "(?:)"
        a = rng.choice(alphabet)
        return a, a
    kind = rng.choice(["union", "concat", "star", "power"])
    x, px = _random_regex(rng, alphabet, depth - 1)
    if kind == "star":
        return f"({x})*", f"(?:{px})*"
    if kind == "power":
        k = rng.randint(0, 3)
        return f"({x})^{k}", f"(?:{px}){{{k}}}"
    y, py = _random_regex(rng, alphabet, depth - 1)
    if kind == "union":
        return f"({x} + {y})", f"(?:{px}|{py})"
    return f"({x})({y})", f"(?:{px})(?:{py})"


def _splits(word: str):
    n = len(word)
    for mask in range(1 << n):
        left = "".join(word[i] for i in range(n) if mask >> i & 1)
        right = "".join(word[i] for i in range(n) if not mask >> i & 1)
        yield left, right


def _preimages(word: str, phi: Morphism):
    """All source words mapping letter-by-letter onto ``word`` (length-preserving phi)."""
    options = [[a for a in phi.source if phi.image(a) == c] for c in word]
    return ("".join(p) for p in itertools.product(*options))


ORACLE_LENGTH = 6
ORACLE_INSTANCES = 50


def oracle_agreement(seed: int = SEED, instances: int = ORACLE_INSTANCES,
                     length: int = ORACLE_LENGTH) -> dict[str, bool]:
    """Per operation: whether the DFA agrees with the definition on all short words."""
    rng = random.Random(seed)
    ab = Alphabet("ab")
    words = list(ab.words(length))
    results: dict[str, bool] = {}

    def agree(name, dfa, predicate, domain=words):
        results[name] = results.get(name, True) and all(dfa.accepts(w) == predicate(w) for w in domain)

    for _ in range(instances):
        d1 = random_dfa(rng, ab, rng.randint(1, 4))
        d2 = random_dfa(rng, ab, rng.randint(1, 4))
        u = "".join(rng.choice("ab") for _ in range(rng.randint(0, 3)))
        agree("union", union(d1, d2), lambda w: d1.accepts(w) or d2.accepts(w))
        agree("intersect", intersect(d1, d2), lambda w: d1.accepts(w) and d2.accepts(w))
        agree("difference", difference(d1, d2), lambda w: d1.accepts(w) and not d2.accepts(w))
        agree("complement", complement(d1), lambda w: not d1.accepts(w))
        agree("left_quotient", left_quotient(u, d1), lambda w: d1.accepts(u + w))
        agree("right_quotient", right_quotient(u, d1), lambda w: d1.accepts(w + u))
        agree("concat", concat(d1, d2),
              lambda w: any(d1.accepts(w[:i]) and d2.accepts(w[i:]) for i in range(len(w) + 1)))
        agree("shuffle", shuffle(d1, d2),
              lambda w: any(d1.accepts(x) and d2.accepts(y) for x, y in _splits(w)))

        d3 = random_dfa(rng, "abc", rng.randint(1, 4))
        phi = random_letter_map(rng, "abc", "ab")
        agree("rename_image", rename_image(d3, phi),
              lambda w: any(d3.accepts(p) for p in _preimages(w, phi)))
        psi = random_morphism(rng, "xyz", "ab", max_len=2)
        xyz_words = list(Alphabet("xyz").words(length))
        agree("inverse_morphism", inverse_morphism(d1, psi), lambda w: d1.accepts(psi(w)), xyz_words)

        text, pattern = _random_regex(rng, "ab", 4)
        compiled = re.compile(pattern)
        agree("compile_regex", compile_regex(text, ab), lambda w: compiled.fullmatch(w) is not None)
    return results


def random_commutative(rng: random.Random, alphabet: str = "ab") -> Dfa:
    terms = [ShuffleTerm(Alphabet(alphabet), tuple(random_epset(rng, 4, 3) for _ in alphabet))
             for _ in range(rng.randint(1, 3))]
    out = terms[0].to_dfa()
    for t in terms[1:]:
        out = union(out, t.to_dfa())
    return out


def property_suites(seed: int = SEED, instances: int = 20) -> list[Check]:
    rng = random.Random(seed)
    renaming = meet_ok = ld_ok = spread_ok = True
    for _ in range(instances):
        L0 = random_dfa(rng, "ab", rng.randint(1, 3))
        L1 = random_dfa(rng, "ab", rng.randint(1, 3))
        renaming &= equivalent(shuffle(L0, L1), shuffle_via_renaming(L0, L1))

        e = [random_epset(rng) for _ in range(4)]
        lhs = intersect(shuffle(from_epset(e[0], "a"), from_epset(e[1], "b")),
                        shuffle(from_epset(e[2], "a"), from_epset(e[3], "b")))
        rhs = shuffle(intersect(from_epset(e[0], "a"), from_epset(e[2], "a")),
                      intersect(from_epset(e[1], "b"), from_epset(e[3], "b")))
        meet_ok &= equivalent(lhs, rhs)

        alpha = random_morphism(rng, "cde", "ab", max_len=1)
        K1, K2 = _unary_on("a", e[0], "ab"), _unary_on("b", e[1], "ab")
        lhs = inverse_morphism(shuffle(K1, K2), alpha)
        rhs = extend_alphabet(shuffle(inverse_morphism(K1, alpha), inverse_morphism(K2, alpha)),
                              Alphabet("cde"))
        ld_ok &= equivalent(lhs, rhs)

        k = rng.randint(1, 3)
        letters = "cde"[:k]
        parts = [from_epset(random_epset(rng), c) for c in letters]
        total = parts[0]
        for p in parts[1:]:
            total = shuffle(total, p)
        beta = Morphism("a", total.alphabet, {"a": letters})
        lhs = inverse_morphism(total, beta)
        rhs = None
        for c, p in zip(letters, parts):
            piece = inverse_morphism(p, Morphism("a", c, {"a": c}))
            rhs = piece if rhs is None else intersect(rhs, piece)
        spread_ok &= equivalent(lhs, rhs)

    decomposed = 0
    round_trip = True
    for _ in range(max(10, instances // 2)):
        L = random_commutative(rng)
        try:
            terms = decompose_commutative(L)
        except SynmonError:
            round_trip = False
            continue
        total = empty_dfa(L.alphabet)
        for t in terms:
            total = union(total, t.to_dfa())
        round_trip &= equivalent(total, L)
        decomposed += 1

    oracle = oracle_agreement(seed)
    checks = [
        Check(f"shuffle via renaming ({instances} pairs)", renaming),
        Check(f"intersection of shuffles ({instances} instances)", meet_ok),
        Check(f"ld-morphism preimage of a shuffle ({instances} instances)", ld_ok),
        Check(f"preimage under a -> c1...ck ({instances} instances)", spread_ok),
        Check(f"decomposition round trip ({decomposed} languages)", round_trip and decomposed >= 10),
    ]
    checks += [Check(f"oracle agreement: {op} ({ORACLE_INSTANCES} instances)", ok)
               for op, ok in oracle.items()]
    return checks


def criterion_10() -> list[Check]:
    return property_suites()


CRITERIA: list[tuple[int, str, Callable[[], list[Check]]]] = [
    (1, "1+a: monoid {1, a, 0} and its order", criterion_1),
    (2, "a+a^6a*: min(x+y, 6), idempotents, Hasse diagram", criterion_2),
    (3, "a+(a^3+a^4)(a^7)*: automaton, a^9 = a^2, order", criterion_3),
    (4, "closure of 1+a and its inequalities", criterion_4),
    (5, "closure of a+a^6a* and its inequalities", criterion_5),
    (6, "closed forms for a^n(F + a^5a*)", criterion_6),
    (7, "quotients and closure of a+(a^3+a^4)(a^7)*", criterion_7),
    (8, "downset monoid laws", criterion_8),
    (9, "numerical semigroups and x <= x^(m+1)", criterion_9),
    (10, "property suites and membership oracles", criterion_10),
]


def run_criterion(cid: int) -> Criterion:
    for i, title, fn in CRITERIA:
        if i == cid:
            try:
                checks = tuple(fn())
            except Exception as exc:  # report, do not abort the whole run
                checks = (Check(f"raised {type(exc).__name__}: {exc}", False),)
            return Criterion(i, title, checks)
    raise KeyError(cid)


def run(ids=None) -> list[Criterion]:
    ids = [i for i, _, _ in CRITERIA] if ids is None else list(ids)
    return [run_criterion(i) for i in ids]

