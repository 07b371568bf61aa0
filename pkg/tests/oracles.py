"""Brute-force oracles for the test suite.

These work straight from definitions and avoid the package's fast paths.
Some live in ``takahasi.reference`` because the experiment drivers use them
too; the rest are test-only.
"""

import random
from itertools import product
from math import gcd

from takahasi.reference import (  # noqa: F401
    commuting_inverse,
    fixed_by_power,
    generated,
    minimal_generators,
    nielsen_rank,
    periodic_union,
    segment_profile,
    substitute,
    word_classes,
)


# ---- free groups -----------------------------------------------------


def reduce_random_order(w, rng=None):
    """Delete cancelling pairs at random positions until none is left."""
    rng = rng or random.Random(0)
    w = list(w)
    while True:
        spots = [i for i in range(len(w) - 1) if w[i] == w[i + 1] ^ 1]
        if not spots:
            return tuple(w)
        i = rng.choice(spots)
        del w[i:i + 2]


def reduced_products(generators, max_factors):
    """Reduced words that are products of at most ``max_factors`` generators or inverses."""
    gens = [tuple(g) for g in generators]
    signed = gens + [tuple(x ^ 1 for x in reversed(g)) for g in gens]
    out = {()}
    layer = {()}
    for _ in range(max_factors):
        nxt = set()
        for w in layer:
            for g in signed:
                nxt.add(reduce_random_order(w + g))
        layer = nxt - out
        out |= nxt
    return out


def path_labels(edges, base, terminals, max_len):
    """Reduced labels of base→terminal paths of length ≤ max_len in an automaton."""
    out_edges = {}
    for p, a, q in edges:
        out_edges.setdefault(p, []).append((a, q))
    labels = set()
    frontier = {(base, ())}
    for _ in range(max_len + 1):
        nxt = set()
        for v, w in frontier:
            if v in terminals:
                labels.add(w)
            for a, q in out_edges.get(v, ()):
                # keep the label reduced as we go; paths with the same end and
                # the same reduced label are interchangeable
                nxt.add((q, w[:-1] if w and w[-1] == a ^ 1 else w + (a,)))
        frontier = nxt
    return labels


# ---- numbers ---------------------------------------------------------


def sums_up_to(gens, bound):
    """Nonempty sums of the generators that are ≤ bound."""
    hit = [False] * (bound + 1)
    for n in range(1, bound + 1):
        hit[n] = any(n == g or (n > g and hit[n - g]) for g in gens)
    return hit


def pairwise_gcd_min(members):
    return min(gcd(x, y) for x in members for y in members)


# ---- finite tables ---------------------------------------------------


def left_cosets(mul, H, elements):
    return {frozenset(mul[g][h] for h in H) for g in elements}


def relative_h_classes(mul, T, elements):
    """Classes of a ~ b iff T¹a = T¹b and aT¹ = bT¹, computed by mutual reachability."""
    T = list(T)

    def left_reach(a, b):
        return a == b or any(mul[t][b] == a for t in T)

    def right_reach(a, b):
        return a == b or any(mul[b][t] == a for t in T)

    elements = list(elements)
    classes = []
    for a in elements:
        for c in classes:
            b = c[0]
            if left_reach(a, b) and left_reach(b, a) and right_reach(a, b) and right_reach(b, a):
                c.append(a)
                break
        else:
            classes.append([a])
    return classes


def is_associative(mul):
    n = len(mul)
    return all(mul[mul[a][b]][c] == mul[a][mul[b][c]] for a, b, c in product(range(n), repeat=3))


def green_h_classes(mul):
    """ℋ-classes from principal one-sided ideals S¹a and aS¹."""
    n = len(mul)
    left = [frozenset([a] + [mul[s][a] for s in range(n)]) for a in range(n)]
    right = [frozenset([a] + [mul[a][s] for s in range(n)]) for a in range(n)]
    classes = {}
    for a in range(n):
        classes.setdefault((left[a], right[a]), set()).add(a)
    return [frozenset(c) for c in classes.values()]


def green_j_classes(mul):
    n = len(mul)
    two = []
    for a in range(n):
        ideal = {a}
        ideal |= {mul[s][a] for s in range(n)}
        ideal |= {mul[a][s] for s in range(n)}
        ideal |= {mul[mul[s][a]][t] for s in range(n) for t in range(n)}
        two.append(frozenset(ideal))
    classes = {}
    for a in range(n):
        classes.setdefault(two[a], set()).add(a)
    return [frozenset(c) for c in classes.values()]


def smallest_generating_subset(mul, unary, T, max_size):
    """Least k such that some k-subset of T generates T (product and unary)."""
    T = sorted(T)
    target = set(T)
    from itertools import combinations
    for k in range(1, max_size + 1):
        for A in combinations(T, k):
            if generated(mul, A, unary) == target:
                return k
    return None


# ---- monoids ---------------------------------------------------------


def class_bfs(w, relations):
    """All words reachable from w by single relation applications in either direction."""
    rel = [(tuple(u), tuple(v)) for u, v in relations]
    rel += [(v, u) for u, v in rel]
    seen = {tuple(w)}
    stack = [tuple(w)]
    while stack:
        x = stack.pop()
        for u, v in rel:
            m = len(u)
            for i in range(len(x) - m + 1):
                if x[i:i + m] == u:
                    y = x[:i] + v + x[i + m:]
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
    return seen
