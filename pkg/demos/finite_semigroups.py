"""Rees matrix and Clifford semigroups built from small groups.

Run: python3 demos/finite_semigroups.py
"""

from takahasi import clifford, groups, rees

# M[C3; 2, 2; P] with a nontrivial sandwich matrix.
C3 = groups.cyclic(3)
S = rees.ReesStructure(C3, 2, 2, [[0, 1], [2, 0]])
A = [(0, 1, 1), (1, 0, 0)]
T = S.closure(A)
print(S)
print(f"  <{A}> has {len(T)} of {S.order} elements; I_T = {sorted(T.I_T)}, Lambda_T = {sorted(T.Lambda_T)}")
for i in sorted(T.I_T):
    for lam in sorted(T.Lambda_T):
        H = rees.component_iso(S, T, i, lam)
        aut = rees.build_g_automaton(S, A, i, lam)
        print(f"  component ({i}, {lam}): image {sorted(H.elements)}, "
              f"automaton reads {sorted(aut.language())} with {len(aut.edges)} edges")
print("  rank bound:", rees.rank_bound_check(S, A, 0, 0))

# A two-level chain C4 > C2 whose link reduces mod 2.
C2, C4 = groups.cyclic(2), groups.cyclic(4)
Y = clifford.chain([C2, C4], [tuple(x % 2 for x in range(4))])
top = Y.closure([(1, 2)])
rep = clifford.green_index(Y, top)
print(f"\nchain C4 > C2, T = {sorted(top)}")
print(f"  per-level indices {rep.per_class}, [S:T] = {rep.sup}, Green index {rep.green}")
print("  retraction onto the top level:", tuple(clifford.retraction_check(Y, Y.elements(), 1)))

# Collapsing the top level onto the bottom one.
down = clifford.collapse_endo(Y, 1, 0)
print("  collapse fixes", sorted(clifford.fix(Y, down).elements),
      "and the levels shrink as", [sorted(x) for x in clifford.level_image_chain(Y, down)])

# A subgroup that is not normal: Green index and Lagrange index disagree.
S3 = groups.symmetric(3)
t = next(g for g in S3.elements() if S3.element_order(g) == 2)
H = groups.closure(S3, [t])
rep = clifford.green_index(clifford.single_group(S3), [(0, g) for g in H.elements])
print(f"\nS3 with a subgroup of order 2: Lagrange index {groups.index(S3, H)}, Green index {rep.green}")
