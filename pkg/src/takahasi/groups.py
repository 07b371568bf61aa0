"""Finite groups given by multiplication tables."""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import prod

import numpy as np


class GroupError(ValueError):
    pass


def search_cap(default: int) -> int:
    """Global exhaustive-search cap, overridable with ``TAKAHASI_CAP``."""
    env = os.environ.get("TAKAHASI_CAP")
    return int(env) if env else default


class FiniteGroup:
    """Group on ``0..n-1`` with ``table[a, b] = a·b``.

    Associativity is checked at construction for n ≤ 64.
    """

    def __init__(self, table, name: str = "G", labels=None, check: bool = True):
        t = np.asarray(table, dtype=np.int64)
        n = t.shape[0]
        if t.shape != (n, n) or n == 0:
            raise GroupError("table must be a nonempty square matrix")
        if t.min() < 0 or t.max() >= n:
            raise GroupError("table entries out of range")
        self.table = t
        self.order = n
        self.name = name
        self.labels = labels
        ids = [e for e in range(n) if (t[e] == np.arange(n)).all() and (t[:, e] == np.arange(n)).all()]
        if not ids:
            raise GroupError("no identity element")
        self.identity = ids[0]
        inv = np.full(n, -1, dtype=np.int64)
        for a in range(n):
            hits = np.nonzero(t[a] == self.identity)[0]
            if len(hits) != 1 or t[hits[0], a] != self.identity:
                raise GroupError(f"element {a} has no two-sided inverse")
            inv[a] = hits[0]
        self.inverse_table = inv
        if check and n <= 64:
            # (ab)c == a(bc) for all a, b, c
            if not (t[t, :] == t[:, t]).all():
                raise GroupError("table is not associative")
        self._tl = t.tolist()
        self._il = inv.tolist()

    def mul(self, a: int, b: int) -> int:
        return self._tl[a][b]

    def inv(self, a: int) -> int:
        return self._il[a]

    def elements(self) -> range:
        return range(self.order)

    def power(self, a: int, k: int) -> int:
        r = self.identity
        if k < 0:
            a, k = self.inv(a), -k
        for _ in range(k):
            r = self.mul(r, a)
        return r

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def to_dict(self) -> dict:
        return {"order": self.order, "table": self.table.tolist(), "name": self.name}

    @classmethod
    def from_dict(cls, d: dict) -> "FiniteGroup":
        g = cls(d["table"], name=d.get("name", "G"))
        if "order" in d and d["order"] != g.order:
            raise GroupError("declared order does not match the table")
        return g

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# ---------------------------------------------------------------------
# constructors


def cyclic(n: int) -> FiniteGroup:
    r = np.arange(n)
    return FiniteGroup((r[:, None] + r[None, :]) % n, name=f"C{n}")


def trivial() -> FiniteGroup:
    return cyclic(1)


def _from_permutations(perms, name) -> FiniteGroup:
    perms = [tuple(p) for p in perms]
    index = {p: k for k, p in enumerate(perms)}
    n = len(perms)
    table = [[index[tuple(p[q[i]] for i in range(len(p)))] for q in perms] for p in perms]
    return FiniteGroup(table, name=name, labels=perms)


def symmetric(n: int) -> FiniteGroup:
    """S_n for n ≤ 4; element 0 is the identity; product is composition (p∘q)."""
    if not 1 <= n <= 4:
        raise GroupError("symmetric groups are provided for n ≤ 4")
    return _from_permutations(sorted(permutations(range(n))), f"S{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n, as symmetries of an n-gon."""
    if n < 1:
        raise GroupError("n must be positive")
    if n <= 2:
        # D1 ≅ C2 and D2 ≅ C2 × C2 have no faithful n-gon action
        return cyclic(2) if n == 1 else direct_product(cyclic(2), cyclic(2), name="D2")
    rots = [tuple((i + k) % n for i in range(n)) for k in range(n)]
    refs = [tuple((k - i) % n for i in range(n)) for k in range(n)]
    return _from_permutations(rots + refs, f"D{n}")


def quaternion() -> FiniteGroup:
    # elements ±1, ±i, ±j, ±k as (sign, unit) with unit in 1,i,j,k
    units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
             ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
             ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]
    idx = {e: k for k, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = units[(u1, u2)]
            row.append(idx[(s1 * s2 * s, u)])
        table.append(row)
    return FiniteGroup(table, name="Q8", labels=elems)


def direct_product(*groups: FiniteGroup, name: str | None = None) -> FiniteGroup:
    orders = [g.order for g in groups]
    tuples = list(product(*[range(n) for n in orders]))
    index = {t: k for k, t in enumerate(tuples)}
    table = [
        [index[tuple(g.mul(x, y) for g, x, y in zip(groups, a, b))] for b in tuples]
        for a in tuples
    ]
    return FiniteGroup(table, name=name or "x".join(g.name for g in groups), labels=tuples)


def by_name(name: str) -> FiniteGroup:
    """``C6``, ``S3``, ``D4``, ``Q8``, ``C2xC2`` and other ``x``-products."""
    parts = name.split("x")
    if len(parts) > 1:
        return direct_product(*[by_name(p) for p in parts], name=name)
    m = re.fullmatch(r"([CSD])(\d+)|(Q8)", name)
    if not m:
        raise GroupError(f"unknown group name {name!r}")
    if m.group(3):
        return quaternion()
    kind, n = m.group(1), int(m.group(2))
    return {"C": cyclic, "S": symmetric, "D": dihedral}[kind](n)


# ---------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class SubgroupHandle:
    group: FiniteGroup
    elements: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_closed(self) -> bool:
        G, H = self.group, self.elements
        if G.identity not in H:
            return False
        return all(G.mul(a, b) in H for a in H for b in H) and all(G.inv(a) in H for a in H)

    def is_normal(self) -> bool:
        G = self.group
        return all(G.mul(G.mul(g, h), G.inv(g)) in self.elements for g in G.elements() for h in self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


def closure(G: FiniteGroup, gens) -> SubgroupHandle:
    """Smallest subgroup containing ``gens`` (the trivial subgroup for no gens)."""
    gens = list(set(gens))
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return SubgroupHandle(G, frozenset(seen))


def whole(G: FiniteGroup) -> SubgroupHandle:
    return SubgroupHandle(G, frozenset(G.elements()))


def index(G: FiniteGroup, H: SubgroupHandle) -> int:
    if H.group != G:
        raise GroupError("subgroup of a different group")
    if not H.is_closed():
        raise GroupError("element set is not a subgroup")
    return G.order // H.order


def min_rank(H, cap: int | None = None) -> int:
    """Least k such that some k elements generate H (0 for the trivial group).

    ``H`` is a :class:`FiniteGroup` or :class:`SubgroupHandle`.  Exhaustive
    over subsets in size order; refuses groups larger than ``cap``.
    """
    if isinstance(H, FiniteGroup):
        H = whole(H)
    cap = search_cap(24) if cap is None else cap
    if H.order > cap:
        raise GroupError(
            f"|H| = {H.order} exceeds the exhaustive cap {cap}; use a rank bound instead"
        )
    G = H.group
    nontrivial = sorted(H.elements - {G.identity})
    if not nontrivial:
        return 0
    target = H.order
    # Each extra generator at least doubles the subgroup, so k ≤ log2|H|.
    for k in range(1, target.bit_length() + 1):
        for combo in combinations(nontrivial, k):
            if len(closure(G, combo).elements) == target:
                return k
    raise AssertionError("unreachable: H generates itself")


def subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    """All subgroups, by closing sets of at most ⌈log2|G|⌉ elements."""
    found = {}
    frontier = [frozenset([G.identity])]
    found[frozenset([G.identity])] = SubgroupHandle(G, frozenset([G.identity]))
    while frontier:
        nxt = []
        for H in frontier:
            for g in G.elements():
                if g in H:
                    continue
                K = closure(G, set(H) | {g}).elements
                if K not in found:
                    found[K] = SubgroupHandle(G, K)
                    nxt.append(K)
        frontier = nxt
    return sorted(found.values(), key=lambda h: (h.order, sorted(h.elements)))


def homomorphisms(G: FiniteGroup, H: FiniteGroup, limit: int | None = None) -> list[tuple[int, ...]]:
    """All homomorphisms G → H as image tuples, via images of a generating set."""
    gens = _generating_set(G)
    words = _spanning_words(G, gens)
    out = []
    for imgs in product(range(H.order), repeat=len(gens)):
        m = [None] * G.order
        for x, w in words.items():
            y = H.identity
            for k in w:
                y = H.mul(y, imgs[k])
            m[x] = y
        if all(m[G.mul(a, b)] == H.mul(m[a], m[b]) for a in G.elements() for b in G.elements()):
            out.append(tuple(m))
            if limit is not None and len(out) >= limit:
                break
    return out


def _generating_set(G: FiniteGroup) -> list[int]:
    k = min_rank(G, cap=max(G.order, 24))
    if k == 0:
        return []
    nontrivial = [g for g in G.elements() if g != G.identity]
    for combo in combinations(nontrivial, k):
        if len(closure(G, combo)) == G.order:
            return list(combo)
    raise AssertionError


def _spanning_words(G: FiniteGroup, gens) -> dict:
    words = {G.identity: ()}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for k, g in enumerate(gens):
                y = G.mul(x, g)
                if y not in words:
                    words[y] = words[x] + (k,)
                    nxt.append(y)
        frontier = nxt
    return words


LIBRARY = ("C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C2xC4", "C2xC2xC2", "D4", "Q8",
           "C9", "C3xC3", "C10", "D5", "C11", "C12", "C2xC6", "D6")


def library(max_order: int) -> list[FiniteGroup]:
    """Named groups of order ≤ max_order used by the sweeps."""
    gs = [by_name(n) for n in LIBRARY]
    return [g for g in gs if g.order <= max_order]


def order_product(groups) -> int:
    return prod(g.order for g in groups)
