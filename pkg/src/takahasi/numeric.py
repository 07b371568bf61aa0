"""Subsemigroups of (ℕ, +), (ℤ, +) and a graded membership test in ℤ².

Convention: ℕ contains 0, but a generated subsemigroup consists of the
nonempty sums of its generators, so 0 is never a member of ⟨g1, ..., gk⟩
with positive generators.  ``p`` in :class:`NumSgpProfile` is the least
p ≥ 0 such that every multiple of ``d`` that is ≥ p is a member; since 0
is a multiple of ``d`` and not a member, p ≥ 1 always.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class NumSgp:
    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if not gens:
            raise ValueError("a numerical subsemigroup needs at least one generator")
        if gens[0] < 1:
            raise ValueError("generators must be positive integers")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, *gens: int) -> "NumSgp":
        return cls(tuple(gens))

    def __contains__(self, n: int) -> bool:
        return member(self, n)

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"


def membership_table(S: NumSgp, upto: int) -> list[bool]:
    """``t[n]`` is True iff n is a nonempty sum of generators, 0 ≤ n ≤ upto."""
    t = [False] * (upto + 1)
    for n in range(1, upto + 1):
        for g in S.generators:
            if g > n:
                break
            if g == n or t[n - g]:
                t[n] = True
                break
    return t


def member(S: NumSgp, n: int) -> bool:
    if n < 0:
        raise ValueError("membership is defined for n ≥ 0")
    return membership_table(S, n)[n]


@dataclass(frozen=True)
class NumSgpProfile:
    d: int
    p: int
    minimal_generators: tuple[int, ...]

    @property
    def frobenius(self) -> int:
        """Largest multiple of d that is not a member (0 when none is positive)."""
        return self.p - 1


def profile(S: NumSgp) -> NumSgpProfile:
    d = reduce(gcd, S.generators)
    g0 = S.generators[0]
    # Once g0/d consecutive multiples of d are members, adding g0 covers the rest.
    run_needed = g0 // d
    upto = max(2 * g0, S.generators[-1])
    while True:
        t = membership_table(S, upto)
        last_gap, run = 0, 0
        for m in range(0, upto + 1, d):
            if t[m]:
                run += 1
            else:
                last_gap, run = m, 0
        if run >= run_needed:
            break
        upto *= 2
    minimal = tuple(
        g for g in S.generators if not any(t[x] and t[g - x] for x in range(1, g))
    )
    return NumSgpProfile(d, last_gap + 1, minimal)


class IntSgpTag(enum.Enum):
    NONNEG = "nonneg"
    NONPOS = "nonpos"
    FULL_GROUP = "full_group"


@dataclass(frozen=True)
class IntSgpClass:
    tag: IntSgpTag
    d: int | None = None

    def __str__(self):
        if self.tag is IntSgpTag.FULL_GROUP:
            return f"Z*{self.d}"
        return self.tag.value


def classify_int(generators: Iterable[int]) -> IntSgpClass:
    """Which of the three shapes a finitely generated subsemigroup of ℤ has."""
    gens = list(generators)
    if not gens:
        raise ValueError("empty generator set")
    if 0 in gens:
        raise ValueError("0 is not allowed as a generator")
    if all(g > 0 for g in gens):
        return IntSgpClass(IntSgpTag.NONNEG)
    if all(g < 0 for g in gens):
        return IntSgpClass(IntSgpTag.NONPOS)
    return IntSgpClass(IntSgpTag.FULL_GROUP, reduce(gcd, (abs(g) for g in gens)))


def int_member(generators: Sequence[int], n: int) -> bool:
    """Is ``n`` a nonempty sum of the (nonzero) integer generators?"""
    cls = classify_int(generators)
    if cls.tag is IntSgpTag.FULL_GROUP:
        return n % cls.d == 0
    if cls.tag is IntSgpTag.NONPOS:
        return n < 0 and member(NumSgp(tuple(-g for g in generators)), -n)
    return n > 0 and member(NumSgp(tuple(generators)), n)


class NotAscendingError(ValueError):
    def __init__(self, pair, witness):
        self.pair = pair
        self.witness = witness
        super().__init__(f"chain not ascending at pair {pair}: {witness} missing")


@dataclass(frozen=True)
class ChainReport:
    d: tuple[int, ...]
    p: tuple[int, ...]
    d_stable_from: int
    p_stable_from: int
    stabilized_at: int
    witnessed: bool


def _contains(S: NumSgp, T: NumSgp):
    """Return a generator of S outside T, or None when S ⊆ T."""
    for g in S.generators:
        if not member(T, g):
            return g
    return None


def chain_stabilization(chain: Sequence[NumSgp]) -> ChainReport:
    """d and p sequences of an ascending chain, and where it stops changing.

    ``d_stable_from``/``p_stable_from`` are the 1-based indices from which
    the d-sequence, respectively the p-sequence, is constant to the end.
    """
    if not chain:
        raise ValueError("empty chain")
    for n in range(len(chain) - 1):
        g = _contains(chain[n], chain[n + 1])
        if g is not None:
            raise NotAscendingError((n + 1, n + 2), g)
    profs = [profile(S) for S in chain]
    ds = tuple(pr.d for pr in profs)
    ps = tuple(pr.p for pr in profs)

    def stable_from(seq):
        k = len(seq)
        while k > 1 and seq[k - 2] == seq[k - 1]:
            k -= 1
        return k

    p = len(chain)
    while p > 1 and _contains(chain[p - 1], chain[p - 2]) is None:
        p -= 1
    return ChainReport(ds, ps, stable_from(ds), stable_from(ps), p, p < len(chain))


# ---------------------------------------------------------------------
# ℤ²


def z2_member(generators: Sequence[tuple[int, int]], target: tuple[int, int], bound: int = 10):
    """Is ``target`` a nonempty sum of the given ℤ² vectors?

    When every generator has second coordinate ≥ 0 (or every one ≤ 0) the
    answer is exact: the second coordinate bounds how often the non-level
    generators can occur, and the leftover first coordinate is decided in
    the one-dimensional subsemigroup of the level generators.  Otherwise a
    search over sums of at most ``bound`` generators is run and ``None``
    ("unknown beyond bound") is returned if the target is not found.
    """
    gens = [tuple(g) for g in generators]
    tx, ty = target
    if all(g[1] >= 0 for g in gens) or all(g[1] <= 0 for g in gens):
        if any(g[1] < 0 for g in gens):
            gens = [(x, -y) for x, y in gens]
            ty = -ty
        return _graded_member(gens, tx, ty)
    return _bounded_member(gens, (tx, ty), bound)


def _graded_member(gens, tx, ty) -> bool:
    if ty < 0:
        return False
    level = [x for x, y in gens if y == 0]
    has_zero = 0 in level
    level = [x for x in level if x != 0]
    raised = sorted({g for g in gens if g[1] > 0})

    def level_hits(r, allow_empty):
        if r == 0 and (allow_empty or has_zero):
            return True
        return bool(level) and int_member(level, r)

    if ty == 0:
        return level_hits(tx, allow_empty=False)
    if not raised:
        return False
    for k in range(1, ty // min(y for _, y in raised) + 1):
        for combo in combinations_with_replacement(raised, k):
            if sum(y for _, y in combo) != ty:
                continue
            if level_hits(tx - sum(x for x, _ in combo), allow_empty=True):
                return True
    return False


def _bounded_member(gens, target, bound):
    layer = set(gens)
    seen = set(layer)
    for _ in range(bound):
        if target in layer:
            return True
        layer = {(x + gx, y + gy) for x, y in layer for gx, gy in gens} - seen
        seen |= layer
    return None


def notts_generators(n: int) -> list[tuple[int, int]]:
    """Generators of S_n = ⟨a⁻², a^{2n-1} b⟩ in ℤ² with a = (1,0), b = (0,1)."""
    return [(-2, 0), (2 * n - 1, 1)]


@dataclass(frozen=True)
class NottsReport:
    n_max: int
    ascending: tuple[bool, ...]
    excluded: tuple[bool, ...]

    @property
    def strict(self) -> tuple[bool, ...]:
        """S_n ⊂ S_{n+1} strictly, for n = 1 .. n_max-1."""
        return tuple(a and e for a, e in zip(self.ascending, self.excluded))

    @property
    def all_strict(self) -> bool:
        return all(self.strict) and all(self.excluded)


def notts_chain(n_max: int) -> NottsReport:
    """Check S_n ⊆ S_{n+1} for n < n_max and (2n+1, 1) ∉ S_n for n ≤ n_max.

    Strictness of S_n ⊂ S_{n+1} follows because (2n+1, 1) generates S_{n+1}.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    asc, exc = [], []
    for n in range(1, n_max + 1):
        if n < n_max:
            nxt = notts_generators(n + 1)
            asc.append(all(z2_member(nxt, g) for g in notts_generators(n)))
        exc.append(z2_member(notts_generators(n), (2 * n + 1, 1)) is False)
    return NottsReport(n_max, tuple(asc), tuple(exc))
