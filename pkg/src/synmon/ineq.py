"""ω-terms and inequalities, evaluated in finite ordered monoids and stamps.

Term syntax (ASCII)::

    term   := '1' | factor+
    factor := var ['^' exp]          var is a single letter
    exp    := k | 'w' | '(w+k)' | '(w)'

``x^w`` is the idempotent power of x and ``x^(w+k)`` is ``x^w x^k``. An
inequality is ``term <= term`` or ``term = term``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .monoid import OrderedMonoid, Stamp

MAX_VARIABLES = 3
_CHUNK = 1 << 21


@dataclass(frozen=True)
class Finite:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("finite exponents must be >= 1")

    def __str__(self):
        return "" if self.k == 1 else f"^{self.k}"


@dataclass(frozen=True)
class OmegaPlus:
    k: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("omega offsets must be >= 0")

    def __str__(self):
        return "^w" if self.k == 0 else f"^(w+{self.k})"


Exponent = Finite | OmegaPlus


@dataclass(frozen=True)
class OmegaTerm:
    factors: tuple[tuple[str, Exponent], ...] = ()

    def variables(self) -> list[str]:
        return list(dict.fromkeys(v for v, _ in self.factors))

    def __str__(self):
        return "".join(f"{v}{e}" for v, e in self.factors) or "1"


@dataclass(frozen=True)
class Inequality:
    lhs: OmegaTerm
    rhs: OmegaTerm
    relation: str = "<="

    def __post_init__(self):
        if self.relation not in ("<=", "="):
            raise ValueError(f"relation must be '<=' or '=', got {self.relation!r}")

    def variables(self) -> list[str]:
        return list(dict.fromkeys(self.lhs.variables() + self.rhs.variables()))

    def __str__(self):
        return f"{self.lhs} {self.relation} {self.rhs}"


_FACTOR = re.compile(r"([a-zA-Z])(?:\^(\d+|w|\(w\)|\(w\+(\d+)\)))?")


def parse_term(text: str) -> OmegaTerm:
    s = re.sub(r"\s+", "", text)
    if s == "1":
        return OmegaTerm()
    factors = []
    pos = 0
    while pos < len(s):
        m = _FACTOR.match(s, pos)
        if not m:
            raise ValueError(f"cannot parse term {text!r} at {s[pos:]!r}")
        var, exp, plus = m.groups()
        if exp is None:
            factors.append((var, Finite(1)))
        elif exp.isdigit():
            if int(exp) > 0:
                factors.append((var, Finite(int(exp))))
        else:
            factors.append((var, OmegaPlus(int(plus) if plus else 0)))
        pos = m.end()
    if not s:
        raise ValueError("empty term")
    return OmegaTerm(tuple(factors))


def parse_inequality(text: str) -> Inequality:
    for rel in ("<=", "="):
        if rel in text:
            lhs, rhs = text.split(rel, 1)
            return Inequality(parse_term(lhs), parse_term(rhs), rel)
    raise ValueError(f"no '<=' or '=' in {text!r}")


def power(m: OrderedMonoid, x: np.ndarray, k: int) -> np.ndarray:
    """x^k elementwise, by repeated squaring."""
    out = np.full(x.shape, m.identity, dtype=np.int64)
    base = np.asarray(x, dtype=np.int64)
    while k:
        if k & 1:
            out = m.mult[out, base]
        base = m.mult[base, base]
        k >>= 1
    return out


def _evaluate(t: OmegaTerm, m: OrderedMonoid, values: Mapping[str, np.ndarray]) -> np.ndarray:
    shape = next(iter(values.values())).shape if values else ()
    out = np.full(shape, m.identity, dtype=np.int64)
    for var, exp in t.factors:
        x = values[var]
        if isinstance(exp, Finite):
            val = power(m, x, exp.k)
        else:
            val = m.mult[m.omega[x], power(m, x, exp.k)]
        out = m.mult[out, val]
    return out


def eval_term(t: OmegaTerm | str, m: OrderedMonoid, assignment: Mapping[str, int]) -> int:
    if isinstance(t, str):
        t = parse_term(t)
    missing = [v for v in t.variables() if v not in assignment]
    if missing:
        raise KeyError(f"unassigned variables {missing}")
    values = {v: np.array(assignment[v]) for v in t.variables()}
    return int(_evaluate(t, m, values))


@dataclass(frozen=True)
class Verdict:
    inequality: Inequality
    holds: bool
    counterexample: dict[str, int] | None = None

    def __bool__(self):
        return self.holds


def _assignments(variables: Sequence[str], domain: Sequence[int]) -> Iterable[dict[str, np.ndarray]]:
    """Chunks of the lexicographic enumeration of domain^variables."""
    k = len(variables)
    dom = np.asarray(domain, dtype=np.int64)
    if k == 0:
        yield {}
        return
    head = 0
    while head < k and len(dom) ** (k - head) > _CHUNK:
        head += 1
    for prefix in itertools.product(dom, repeat=head):
        grids = np.meshgrid(*([dom] * (k - head)), indexing="ij")
        size = grids[0].size if grids else 1
        values = {v: np.full(size, p, dtype=np.int64) for v, p in zip(variables, prefix)}
        for v, g in zip(variables[head:], grids):
            values[v] = g.ravel()
        yield values


def check(m: OrderedMonoid, ineq: Inequality | str, domain: Sequence[int] | None = None) -> Verdict:
    """Exhaustive check over all assignments of the variables to ``domain``
    (all elements by default). Reports the first failing assignment."""
    if isinstance(ineq, str):
        ineq = parse_inequality(ineq)
    variables = ineq.variables()
    if len(variables) > MAX_VARIABLES:
        raise ValueError(f"at most {MAX_VARIABLES} variables are supported")
    domain = range(m.n) if domain is None else sorted(set(domain))
    for values in _assignments(variables, domain):
        left = _evaluate(ineq.lhs, m, values)
        right = _evaluate(ineq.rhs, m, values)
        ok = m.leq[left, right]
        if ineq.relation == "=":
            ok = ok & m.leq[right, left]
        ok = np.broadcast_to(ok, np.shape(left))
        if not ok.all():
            i = int(np.argmin(ok)) if np.ndim(ok) else 0
            witness = {v: int(np.ravel(values[v])[i]) for v in variables}
            return Verdict(ineq, False, witness)
    return Verdict(ineq, True)


def satisfies(m: OrderedMonoid, ineq: Inequality | str) -> bool:
    return check(m, ineq).holds


def stamp_domain(s: Stamp, mode: str) -> list[int]:
    if mode == "monoid":
        return list(range(s.target.n))
    if mode == "lp":
        return sorted(set(s.images))
    if mode == "ld":
        return sorted(set(s.images) | {s.target.identity})
    raise ValueError(f"mode must be 'monoid', 'lp' or 'ld', got {mode!r}")


def stamp_satisfies(s: Stamp, ineq: Inequality | str, mode: str = "monoid") -> bool:
    """Monoid mode ranges over all of M; lp over letter images; ld also allows the empty word."""
    return check(s.target, ineq, stamp_domain(s, mode)).holds


def enumerate_power_inequalities(m: OrderedMonoid, bound: int) -> set[tuple[int, int]]:
    """All (p, q) with 0 <= p, q <= bound such that M satisfies x^p <= x^q."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    x = np.arange(m.n)
    powers = [power(m, x, k) for k in range(bound + 1)]
    return {(p, q) for p in range(bound + 1) for q in range(bound + 1)
            if m.leq[powers[p], powers[q]].all()}
