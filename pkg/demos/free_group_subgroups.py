"""Subgroups of the free group F(a, b) through their Stallings graphs.

Run: python3 demos/free_group_subgroups.py
"""

from takahasi import stallings
from takahasi.reference import nielsen_rank
from takahasi.words import Alphabet

ab = Alphabet(("a", "b"), involutive=True)


def show(gens_text):
    gens = [ab.parse(w) for w in gens_text.split(",")]
    G = stallings.subgroup(gens, ab)
    print(f"H = <{gens_text}>")
    print(f"  graph: {G.vertex_count} vertices, {G.edge_count // 2} edges")
    print(f"  rank from the graph: {G.rank}   Nielsen basis size: {nielsen_rank(gens)}")
    return G


# Both petals start with a, so folding merges them along that edge.
G = show("ab, ab'")

# A subgroup of rank 3 generated by 3 words, and one that collapses to rank 1.
show("aa, bb, ab")
show("ab, abab, ababab")

# Membership is a walk from the base vertex.
H = stallings.subgroup([ab.parse("ab"), ab.parse("ba")], ab)
for w in ("abba", "abab", "a b a' b'"):
    print(f"  {w!r} in <ab, ba>: {H.member(ab.parse(w))}")
