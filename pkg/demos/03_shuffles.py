"""Shuffle products, renamings, and splitting commutative languages into shuffles.

Run: python demos/03_shuffles.py
"""
from synmon import (
    Alphabet,
    Morphism,
    compile_regex,
    decompose_commutative,
    equivalent,
    rename_image,
    shuffle,
    syntactic_monoid,
    to_regex,
)
from synmon.reproduce import shuffle_via_renaming

ab = "ab"
x = compile_regex("(aa)*", ab)
y = compile_regex("b(bb)*", ab)
s = shuffle(x, y)
print("shuffle of (aa)* with b(bb)*")
print("  commutative monoid:", syntactic_monoid(s).monoid.is_commutative())
print("  as a union of shuffles:", "  +  ".join(t.to_text() for t in decompose_commutative(s)))

# The same shuffle, built by tagging each side with its own copy of the
# alphabet, intersecting preimages, and merging the copies again.
print("  equals the tag-intersect-merge construction:", equivalent(shuffle_via_renaming(x, y), s))

merge = Morphism(Alphabet("ab"), Alphabet("c"), {"a": "c", "b": "c"})
print("image of (ab)* when a and b both become c:", to_regex(rename_image(compile_regex("(ab)*", ab), merge)))
print()

for text in ["((a + b)(a + b))*", "a* + b*", "(b* a b* a)* b*"]:
    d = compile_regex(text, ab)
    print(f"== {text}")
    for term in decompose_commutative(d):
        print(f"   {term.to_text()}")
