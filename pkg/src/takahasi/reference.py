"""Slow, direct reference computations used as cross-checks.

Nothing here imports the fast implementations: words are plain tuples
over the involutive coding (letter x, inverse x ^ 1) or over 0..k-1.
"""

from __future__ import annotations

from functools import reduce
from itertools import product
from math import gcd

import numpy as np


# ---------------------------------------------------------------------
# free groups: Nielsen reduction


def _reduce(w):
    out = []
    for x in w:
        if out and out[-1] == x ^ 1:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _inv(w):
    return tuple(x ^ 1 for x in reversed(w))


def _signed(X):
    return [(i, e, w if e == 1 else _inv(w)) for i, w in enumerate(X) for e in (1, -1)]


def nielsen_n1(X) -> bool:
    for i, _, u in _signed(X):
        for j, _, v in _signed(X):
            if i == j and u == _inv(v):
                continue
            if len(_reduce(u + v)) < max(len(u), len(v)):
                return False
    return True


def nielsen_n2(X) -> bool:
    s = _signed(X)
    for _, _, u in s:
        for _, _, v in s:
            if _reduce(u + v) == ():
                continue
            for _, _, w in s:
                if _reduce(v + w) == ():
                    continue
                if len(_reduce(u + v + w)) <= len(u) - len(v) + len(w):
                    return False
    return True


def _moves(X):
    """All single Nielsen moves x_i ← x_i^{±1} x_j^{±1} or x_j^{±1} x_i^{±1}."""
    for i in range(len(X)):
        for j in range(len(X)):
            if i == j:
                continue
            for a, b in product((1, -1), repeat=2):
                u = X[i] if a == 1 else _inv(X[i])
                v = X[j] if b == 1 else _inv(X[j])
                for w in (_reduce(u + v), _reduce(v + u)):
                    Y = list(X)
                    Y[i] = w
                    yield Y


def _normal(X):
    """Drop empty words and pick a representative of each w / w⁻¹."""
    return tuple(sorted(min(w, _inv(w)) for w in X if w))


def nielsen_basis(generators, plateau_limit: int = 200_000):
    """A Nielsen-reduced generating set (N0, N1, N2) of the subgroup."""
    X = list(_normal(_reduce(tuple(w)) for w in generators))
    while True:
        # greedy length reduction
        improved = True
        while improved:
            improved = False
            total = sum(map(len, X))
            for Y in _moves(X):
                Y = list(_normal(Y))
                if sum(map(len, Y)) < total:
                    X = Y
                    improved = True
                    break
        if nielsen_n1(X) and nielsen_n2(X):
            return X
        # search the equal-length plateau for a shorter set or a reduced one
        total = sum(map(len, X))
        start = _normal(X)
        seen = {start}
        frontier = [start]
        found = None
        while frontier and found is None:
            nxt = []
            for Z in frontier:
                for Y in _moves(list(Z)):
                    Y = _normal(Y)
                    t = sum(map(len, Y))
                    if t < total or (t == total and nielsen_n1(Y) and nielsen_n2(Y)):
                        found = Y
                        break
                    if t == total and Y not in seen:
                        seen.add(Y)
                        nxt.append(Y)
                        if len(seen) > plateau_limit:
                            raise RuntimeError("Nielsen plateau search exceeded its limit")
                if found is not None:
                    break
            frontier = nxt
        if found is None:
            raise RuntimeError("no Nielsen-reduced set found on the plateau")
        X = list(found)


def nielsen_rank(generators) -> int:
    return len(nielsen_basis(generators))


# ---------------------------------------------------------------------
# numerical subsemigroups


def segment_profile(generators, bound: int | None = None):
    """(d, p) by listing all sums below ``bound``: p is one more than the
    largest multiple of d that is not a sum."""
    gens = sorted(set(generators))
    d = reduce(gcd, gens)
    if bound is None:
        bound = 4 * gens[-1] * gens[-1] + 4 * gens[-1]
    sums = set()
    frontier = set(gens)
    while frontier:
        sums |= frontier
        frontier = {s + g for s in frontier for g in gens if s + g <= bound} - sums
    gaps = [m for m in range(0, bound + 1, d) if m not in sums]
    return d, max(gaps) + 1


def minimal_generators(generators):
    gens = sorted(set(generators))
    out = []
    for g in gens:
        others = [h for h in gens if h < g]
        reach = {0}
        for _ in range(g):
            reach |= {r + h for r in reach for h in others if r + h <= g}
        if g not in reach:
            out.append(g)
    return out


# ---------------------------------------------------------------------
# balanced presentations


class _DSU:
    def __init__(self):
        self.p = {}

    def find(self, x):
        self.p.setdefault(x, x)
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[max(a, b)] = min(a, b)


def word_classes(k: int, relations, max_len: int) -> dict:
    """Map every word of length ≤ max_len over 0..k-1 to the lexicographically
    least word of its class, by saturating single relation applications."""
    canon = {}
    for n in range(max_len + 1):
        dsu = _DSU()
        words = list(product(range(k), repeat=n))
        for w in words:
            dsu.find(w)
            for u, v in relations:
                u, v = tuple(u), tuple(v)
                m = len(u)
                for i in range(n - m + 1):
                    if w[i:i + m] == u:
                        dsu.union(w, w[:i] + v + w[i + m:])
        roots = {}
        for w in words:
            r = dsu.find(w)
            roots[r] = min(roots.get(r, w), w)
        for w in words:
            canon[w] = roots[dsu.find(w)]
    return canon


def substitute(images, w):
    out = []
    for a in w:
        out.extend(images[a])
    return tuple(out)


_REPS = {}


def _reps_with_counts(canon, k, max_len):
    hit = _REPS.get(id(canon))
    if hit is None or hit[0] is not canon:
        reps = sorted({c for w, c in canon.items() if 1 <= len(w) <= max_len})
        counts = np.array([[x.count(a) for a in range(k)] for x in reps], dtype=np.int64)
        hit = _REPS[id(canon)] = (canon, reps, counts)
    return hit[1], hit[2]


def periodic_union(k: int, relations, images, max_len: int, n_max: int, canon=None) -> dict:
    """For each class of length 1..max_len that lies in Fix(φ^n) for some
    n ≤ n_max, the least such n.  xφ^n is assembled from the letter images
    of φ^n and only spelled out when its length matches |x|."""
    canon = canon or word_classes(k, relations, max_len)
    reps, counts = _reps_with_counts(canon, k, max_len)
    powers = [tuple((a,) for a in range(k))]
    for _ in range(n_max):
        powers.append(tuple(substitute(images, w) for w in powers[-1]))
    own = counts.sum(axis=1)
    out = {}
    for n in range(1, n_max + 1):
        size = counts @ np.array([len(w) for w in powers[n]], dtype=np.int64)
        for j in np.flatnonzero(size == own).tolist():
            x = reps[j]
            if x not in out and canon[substitute(powers[n], x)] == x:
                out[x] = n
    return out


def fixed_by_power(k: int, relations, images, max_len: int, n: int, canon=None) -> set:
    canon = canon or word_classes(k, relations, max_len)
    reps = sorted({c for w, c in canon.items() if 1 <= len(w) <= max_len})
    out = set()
    for x in reps:
        y = x
        for _ in range(n):
            y = substitute(images, y)
        if len(y) == len(x) and canon[y] == x:
            out.add(x)
    return out


# ---------------------------------------------------------------------
# Rees and Clifford elements


def commuting_inverse(mul, x):
    """The unique y with xyx = x, yxy = y and xy = yx (by search)."""
    hits = [y for y in range(len(mul))
            if mul[mul[x][y]][x] == x and mul[mul[y][x]][y] == y and mul[x][y] == mul[y][x]]
    if len(hits) != 1:
        raise ValueError(f"{len(hits)} commuting inverses for {x}")
    return hits[0]


def generated(mul, gens, unary=None) -> set:
    """Closure by repeated squaring of the whole set (products of any two members)."""
    T = set(gens)
    while True:
        new = {mul[a][b] for a in T for b in T}
        if unary is not None:
            new |= {unary[a] for a in T}
        if new <= T:
            return T
        T |= new
