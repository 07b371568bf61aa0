"""Finite algebras on ``0..n-1``: a product table and an optional unary table.

Shared machinery for the Rees and Clifford modules: subalgebra closure,
exhaustive minimum generating sets, endomorphism validation, fixed and
periodic points, Green's relations and the Green index of a subsemigroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial, lcm
from typing import Callable, Iterable, Sequence


class NotHomomorphism(ValueError):
    def __init__(self, pair, detail=""):
        self.pair = pair
        super().__init__(f"map is not a homomorphism at pair {pair}{detail}")


class SearchCapExceeded(ValueError):
    pass


class FiniteAlgebra:
    def __init__(self, mul: Sequence[Sequence[int]], unary: Sequence[int] | None = None):
        self.mul = [list(map(int, row)) for row in mul]
        self.n = len(self.mul)
        self.unary = None if unary is None else [int(x) for x in unary]

    def __len__(self):
        return self.n

    def product(self, word: Iterable[int]) -> int:
        it = iter(word)
        x = next(it)
        for y in it:
            x = self.mul[x][y]
        return x

    def closure(self, gens: Iterable[int]) -> frozenset:
        """Least subset containing ``gens`` closed under product and unary."""
        gens = list(dict.fromkeys(gens))
        if not gens:
            return frozenset()
        seen = set(gens)
        order = list(gens)
        k = 0
        while True:
            # every element is a product of generators, so right
            # multiplication by generators reaches the whole subsemigroup
            while k < len(order):
                x = order[k]
                k += 1
                row = self.mul[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        order.append(y)
            if self.unary is None:
                break
            extra = [self.unary[x] for x in order if self.unary[x] not in seen]
            if not extra:
                break
            extra = list(dict.fromkeys(extra))
            gens += extra
            seen.update(extra)
            order += extra
            k = 0
        return frozenset(seen)

    def is_closed(self, T: Iterable[int]) -> bool:
        T = set(T)
        if any(self.mul[a][b] not in T for a in T for b in T):
            return False
        return self.unary is None or all(self.unary[a] in T for a in T)

    def rank(self, T: Iterable[int], upper: int | None = None, max_size: int | None = None,
             max_subset: int | None = None) -> int:
        """Minimum size of a subset of T whose closure is T.

        ``upper`` is the size of a generating set already known (only
        smaller subsets are tried).  The empty set has rank 0.
        """
        T = frozenset(T)
        if not T:
            return 0
        if max_size is not None and len(T) > max_size:
            raise SearchCapExceeded(f"|T| = {len(T)} exceeds the search cap {max_size}")
        if upper is None:
            upper = len(T)
        elems = sorted(T)
        for k in range(1, upper):
            if max_subset is not None and k > max_subset:
                raise SearchCapExceeded(f"rank search exceeds subset size {max_subset}")
            for combo in combinations(elems, k):
                if self.closure(combo) == T:
                    return k
        return upper

    # -- endomorphisms ------------------------------------------------

    def check_endomorphism(self, phi: Sequence[int]) -> None:
        """Raise :class:`NotHomomorphism` naming the first pair with (xy)φ ≠ xφ·yφ."""
        if len(phi) != self.n or any(not 0 <= y < self.n for y in phi):
            raise ValueError("map must send every element to an element")
        for x in range(self.n):
            row, px = self.mul[x], phi[x]
            prow = self.mul[px]
            for y in range(self.n):
                if phi[row[y]] != prow[phi[y]]:
                    raise NotHomomorphism((x, y))
        if self.unary is not None:
            for x in range(self.n):
                if phi[self.unary[x]] != self.unary[phi[x]]:
                    raise NotHomomorphism((x, x), " (unary)")

    def extend(self, gens: Sequence[int], images: Sequence[int]) -> list[int]:
        """Extend generator images to a total endomorphism and validate it.

        The generators must generate the whole algebra.
        """
        words = {}
        frontier = []
        for g, img in zip(gens, images):
            if g in words and words[g] != img:
                raise NotHomomorphism((g, g), " (conflicting generator images)")
            words[g] = img
            frontier.append(g)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul[x][g]
                    if y not in words:
                        words[y] = self.mul[words[x]][words[g]]
                        nxt.append(y)
            frontier = nxt
        if self.unary is not None:
            for x in list(words):
                u = self.unary[x]
                if u not in words:
                    words[u] = self.unary[words[x]]
        if len(words) != self.n:
            raise ValueError("generators do not generate the algebra")
        phi = [words[x] for x in range(self.n)]
        self.check_endomorphism(phi)
        return phi


# ---------------------------------------------------------------------
# fixed and periodic points of a self-map of a finite set


def compose_power(phi: Sequence[int], k: int) -> list[int]:
    """φ^k by repeated squaring."""
    n = len(phi)
    result = list(range(n))
    base = list(phi)
    while k:
        if k & 1:
            result = [base[x] for x in result]
        base = [base[x] for x in base]
        k >>= 1
    return result


def fixed_points(phi: Sequence[int]) -> frozenset:
    return frozenset(x for x, y in enumerate(phi) if x == y)


def periods(phi: Sequence[int]) -> dict[int, int]:
    """Period of every periodic point (points lying on a cycle of φ)."""
    n = len(phi)
    state = [0] * n  # 0 new, 1 on stack, 2 done
    out = {}
    for s in range(n):
        if state[s]:
            continue
        path = []
        x = s
        while state[x] == 0:
            state[x] = 1
            path.append(x)
            x = phi[x]
        if state[x] == 1:
            cycle = path[path.index(x):]
            for y in cycle:
                out[y] = len(cycle)
        for y in path:
            state[y] = 2
    return out


@dataclass(frozen=True)
class PerResult:
    k: int
    periodic: frozenset
    R: int
    periods: dict

    @property
    def stabilization(self) -> int:
        return self.k


def periodic_points(phi: Sequence[int]) -> PerResult:
    """Per(φ), the least k with Fix(φ^{k!}) = Per(φ), and R = lcm of periods."""
    per = periods(phi)
    R = lcm(*per.values()) if per else 1
    k = 1
    while factorial(k) % R:
        k += 1
    return PerResult(k, frozenset(per), R, per)


def image_chain(phi: Sequence[int], start: Iterable[int] | None = None) -> list[frozenset]:
    """S, Sφ, Sφ², ... until the image stops shrinking."""
    cur = frozenset(range(len(phi)) if start is None else start)
    chain = [cur]
    while True:
        nxt = frozenset(phi[x] for x in cur)
        if nxt == cur:
            return chain
        chain.append(nxt)
        cur = nxt


# ---------------------------------------------------------------------
# Green's relations


def green_keys(alg: FiniteAlgebra, T: Iterable[int], elements: Iterable[int] | None = None):
    """Map a ↦ (T¹a, aT¹): equal keys means ℋ^T-related."""
    T = sorted(set(T))
    elements = range(alg.n) if elements is None else elements
    keys = {}
    for a in elements:
        left = frozenset([a, *(alg.mul[t][a] for t in T)])
        right = frozenset([a, *(alg.mul[a][t] for t in T)])
        keys[a] = (left, right)
    return keys


@dataclass(frozen=True)
class GreenIndex:
    value: int
    classes_outside: int
    classes_total: int


def green_index(alg: FiniteAlgebra, T: Iterable[int], elements: Iterable[int] | None = None) -> GreenIndex:
    """One plus the number of ℋ^T-classes contained in S∖T."""
    T = frozenset(T)
    keys = green_keys(alg, T, elements)
    outside = {k for a, k in keys.items() if a not in T}
    total = set(keys.values())
    return GreenIndex(len(outside) + 1, len(outside), len(total))


def h_classes(alg: FiniteAlgebra) -> list[frozenset]:
    """ℋ-classes computed from the table (aS¹ = bS¹ and S¹a = S¹b)."""
    keys = green_keys(alg, range(alg.n))
    groups: dict = {}
    for a, k in keys.items():
        groups.setdefault(k, set()).add(a)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def j_classes(alg: FiniteAlgebra) -> list[frozenset]:
    """𝒥-classes: a 𝒥 b iff S¹aS¹ = S¹bS¹."""
    n = alg.n
    ideals = {}
    for a in range(n):
        left = {a, *(alg.mul[s][a] for s in range(n))}
        both = set(left)
        for x in left:
            both.update(alg.mul[x][s] for s in range(n))
        ideals[a] = frozenset(both)
    groups: dict = {}
    for a, k in ideals.items():
        groups.setdefault(k, set()).add(a)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def principal_ideal(alg: FiniteAlgebra, a: int) -> frozenset:
    n = alg.n
    left = {a, *(alg.mul[s][a] for s in range(n))}
    both = set(left)
    for x in left:
        both.update(alg.mul[x][s] for s in range(n))
    return frozenset(both)


def is_associative(alg: FiniteAlgebra) -> tuple | None:
    """First triple violating associativity, or None."""
    m = alg.mul
    for a in range(alg.n):
        for b in range(alg.n):
            ab = m[a][b]
            rb = m[b]
            for c in range(alg.n):
                if m[ab][c] != m[a][rb[c]]:
                    return (a, b, c)
    return None


def decompose(elements: Iterable[int], key: Callable[[int], object]) -> dict:
    out: dict = {}
    for x in sorted(elements):
        out.setdefault(key(x), []).append(x)
    return out
