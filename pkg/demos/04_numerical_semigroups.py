"""Additive submonoids of the naturals read off from a single inequality family.

For a set S of naturals let L_S be the lengths n+1 with n in <S>. The syntactic
monoid of L_S satisfies x <= x^(m+1) exactly when m lies in <S>.

Run: python demos/04_numerical_semigroups.py
"""
from synmon import build_LS, generate, to_regex, vs_characterization

BOUND = 14

for S in [{3, 5}, {4, 6}, {2, 3}, {5, 7, 9}]:
    sg = generate(S)
    rows = vs_characterization(S, BOUND)
    held = [m for m, ok in rows if ok]
    print(f"S = {sorted(S)}: L_S = {to_regex(build_LS(S))}")
    print(f"   minimal generators {sorted(sg.minimal_generators)}, gcd {sg.gcd}, conductor {sg.conductor}")
    print(f"   m <= {BOUND} with x <= x^(m+1): {held}")
    print(f"   members of <S> up to {BOUND}:   {sg.members(BOUND)}")

# Different generating sets, same semigroup, same inequalities.
a, b = vs_characterization({3, 5}, BOUND), vs_characterization({3, 5, 8, 10}, BOUND)
print("\n{3,5} and {3,5,8,10} give the same rows:", a == b)
