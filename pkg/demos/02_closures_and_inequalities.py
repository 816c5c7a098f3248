"""Lattice closures of single languages and the inequalities their monoids satisfy.

Run: python demos/02_closures_and_inequalities.py
"""
from synmon import (
    compile_regex,
    enumerate_power_inequalities,
    lattice_closure,
    satisfies,
    syntactic_monoid,
    to_regex,
)

CANDIDATES = ["xy = yx", "x <= 1", "1 <= x", "x^2 <= x^3", "1 <= x^5", "x^6 = x^7", "x^2 = x^9",
              "x^w = x^(w+1)"]

for text in ["1 + a", "a + a^6 a*", "a + (a^3 + a^4)(a^7)*"]:
    gen = compile_regex(text, "a")
    family = lattice_closure([gen])
    m = syntactic_monoid(gen).monoid
    print(f"== closure of {text} under union, intersection and quotients: {len(family)} languages")
    if len(family) <= 20:
        for d in sorted(family, key=lambda d: (len(to_regex(d)), to_regex(d))):
            print(f"     {to_regex(d)}")
    held = [s for s in CANDIDATES if satisfies(m, s)]
    print(f"   satisfied: {'; '.join(held)}")
    powers = sorted(enumerate_power_inequalities(m, 7))
    print(f"   x^p <= x^q with p = 0: q in {[q for p, q in powers if p == 0]}")
    print()

# Adding complement turns the lattice into a Boolean algebra.
boolean = lattice_closure([compile_regex("a + (a^3 + a^4)(a^7)*", "a")],
                          ops=["union", "intersect", "complement", "quotients"])
print(f"with complement as well, the third family grows to {len(boolean)} languages")
