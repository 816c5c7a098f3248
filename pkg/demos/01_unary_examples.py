"""Three one-letter languages and their ordered syntactic monoids.

Run: python demos/01_unary_examples.py
"""
from synmon import compile_regex, monoid_props, syntactic_monoid, to_epset

EXAMPLES = ["1 + a", "a + a^6 a*", "a + (a^3 + a^4)(a^7)*"]

for text in EXAMPLES:
    data = syntactic_monoid(compile_regex(text, "a"))
    m = data.monoid
    props = monoid_props(m)
    print(f"== {text}")
    print(f"   minimal DFA: {len(data.dfa.delta)} states, finals {sorted(data.dfa.finals)}")
    print(f"   as a set of lengths: {to_epset(data.dfa).members(20)} ...")
    print(f"   monoid elements: {', '.join(m.names)}")
    print(f"   idempotents: {', '.join(m.names[e] for e in sorted(props.idempotents))}")
    covers = sorted(m.covers())
    if covers:
        print("   order, covering pairs: " + ", ".join(f"{m.names[x]} < {m.names[y]}" for x, y in covers))
    else:
        print("   order: equality (every element is comparable only to itself)")
    print()

# The second monoid is a truncated addition: a^i a^j = a^min(i+j, 6).
chain = syntactic_monoid(compile_regex("a + a^6 a*", "a")).monoid
print("Hasse diagram of a + a^6 a* in DOT:")
print(chain.to_dot())
