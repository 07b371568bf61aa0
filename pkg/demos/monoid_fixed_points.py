"""Fixed and periodic points of endomorphisms of balanced monoids.

Run: python3 demos/monoid_fixed_points.py
"""

from takahasi import presentations as pr

# Swapping the letters of the free commutative monoid on a, b.
P = pr.presentation("monoid a b ; ab = ba")
swap = pr.validate_endo(P, "a -> b ; b -> a")
fix = pr.fix_up_to(P, swap, 8)
print(P)
print("  fixed up to length 8:", [P.fmt(w) for w in fix.fixed_words()])
print("  generated by:", [P.fmt(w) for w in fix.indecomposables])

per = pr.per_up_to(P, swap, 8)
print(f"  every element is periodic: {per.count()} classes, k = {per.k}, R = {per.R}")

# Same swap, different relation: now a² = b² is the only new fixed generator.
Q = pr.presentation("monoid a b ; aa = bb")
fix = pr.fix_up_to(Q, pr.validate_endo(Q, "a -> b ; b -> a"), 8)
print(Q)
print("  generated by:", [Q.fmt(w) for w in fix.indecomposables])

# With three letters and cac = cbc the fixed submonoid needs a new
# generator at every odd length.
E = pr.presentation("monoid a b c ; cac = cbc")
phi = pr.validate_endo(E, "a -> b ; b -> a ; c -> c")
print(E)
for L in (3, 5, 7, 9, 11):
    ind = pr.fix_up_to(E, phi, L).indecomposables
    print(f"  L = {L:2d}: {len(ind)} indecomposables, longest {E.fmt(max(ind, key=len))}")

# Orbits of generators under an endomorphism that erases a letter.
F = pr.presentation("monoid a b")
psi = pr.validate_endo(F, "a -> b ; b -> 1")
for a, orbit in pr.eventual_period(F, psi).items():
    print(f"  orbit of {F.fmt((a,))}: preperiod {orbit.m}, period {orbit.p}")
