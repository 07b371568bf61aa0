"""Clifford semigroups as strong semilattices of finite groups.

The semilattice Y is ``0..m-1`` with a meet table.  ``groups[a]`` is the
group at level ``a`` and ``links[(a, b)]`` (for a ≥ b, i.e. meet(a, b) = b)
is the linking homomorphism G_a → G_b as an image tuple.  Elements are
pairs ``(a, g)``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from . import finite
from .groups import FiniteGroup, SubgroupHandle, homomorphisms, library, min_rank


class CliffordError(ValueError):
    pass


class SemilatticeOfGroups:
    def __init__(self, meet, groups: Sequence[FiniteGroup], links: dict, check: bool = True):
        self.meet = [list(map(int, row)) for row in meet]
        self.groups = list(groups)
        m = len(self.meet)
        if len(self.groups) != m:
            raise CliffordError("one group per semilattice element")
        self.links = {tuple(k): tuple(map(int, v)) for k, v in links.items()}
        for a in range(m):
            self.links.setdefault((a, a), tuple(self.groups[a].elements()))
        self.offsets = [0]
        for G in self.groups:
            self.offsets.append(self.offsets[-1] + G.order)
        if check:
            self.validate()

    @property
    def levels(self) -> int:
        return len(self.meet)

    def geq(self, a: int, b: int) -> bool:
        return self.meet[a][b] == b

    def validate(self) -> None:
        m = self.levels
        M = self.meet
        for a in range(m):
            if M[a][a] != a:
                raise CliffordError(f"meet is not idempotent at {a}")
            for b in range(m):
                if M[a][b] != M[b][a]:
                    raise CliffordError(f"meet is not commutative at ({a}, {b})")
                for c in range(m):
                    if M[M[a][b]][c] != M[a][M[b][c]]:
                        raise CliffordError(f"meet is not associative at ({a}, {b}, {c})")
        for a in range(m):
            for b in range(m):
                if not self.geq(a, b):
                    continue
                if (a, b) not in self.links:
                    raise CliffordError(f"missing link {a} ≥ {b}")
                f = self.links[(a, b)]
                Ga, Gb = self.groups[a], self.groups[b]
                if len(f) != Ga.order:
                    raise CliffordError(f"link {a} ≥ {b} has the wrong length")
                for x in Ga.elements():
                    for y in Ga.elements():
                        if f[Ga.mul(x, y)] != Gb.mul(f[x], f[y]):
                            raise CliffordError(f"link {a} ≥ {b} is not a homomorphism at ({x}, {y})")
        if any(self.links[(a, a)] != tuple(self.groups[a].elements()) for a in range(m)):
            raise CliffordError("links from a level to itself must be identities")
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    if self.geq(a, b) and self.geq(b, c):
                        f, g, h = self.links[(a, b)], self.links[(b, c)], self.links[(a, c)]
                        if any(g[f[x]] != h[x] for x in range(len(f))):
                            raise CliffordError(f"links do not compose along {a} ≥ {b} ≥ {c}")

    # element coding
    def code(self, x) -> int:
        a, g = x
        if not (0 <= a < self.levels and 0 <= g < self.groups[a].order):
            raise CliffordError(f"{x} is not an element")
        return self.offsets[a] + g

    def element(self, c: int) -> tuple[int, int]:
        for a in range(self.levels):
            if c < self.offsets[a + 1]:
                return (a, c - self.offsets[a])
        raise CliffordError(f"code {c} out of range")

    @property
    def order(self) -> int:
        return self.offsets[-1]

    def elements(self):
        return [self.element(c) for c in range(self.order)]

    def identity(self, a: int):
        return (a, self.groups[a].identity)

    def multiply(self, x, y):
        (a, g), (b, h) = x, y
        c = self.meet[a][b]
        return (c, self.groups[c].mul(self.links[(a, c)][g], self.links[(b, c)][h]))

    def unary(self, x):
        a, g = x
        return (a, self.groups[a].inv(g))

    @cached_property
    def algebra(self) -> finite.FiniteAlgebra:
        els = self.elements()
        mul = [[self.code(self.multiply(x, y)) for y in els] for x in els]
        return finite.FiniteAlgebra(mul, [self.code(self.unary(x)) for x in els])

    def codes(self, xs) -> list[int]:
        return [self.code(tuple(x)) for x in xs]

    def closure(self, A) -> frozenset:
        A = [tuple(x) for x in A]
        if not A:
            raise CliffordError("closure needs at least one generator")
        return frozenset(self.element(c) for c in self.algebra.closure(self.codes(A)))

    def is_subalgebra(self, T) -> bool:
        return self.algebra.is_closed(self.codes(T))

    def h_class(self, a: int) -> frozenset:
        return frozenset((a, g) for g in self.groups[a].elements())

    def to_dict(self) -> dict:
        return {
            "meet": self.meet,
            "groups": [G.to_dict() for G in self.groups],
            "links": [{"from": a, "to": b, "map": list(f)} for (a, b), f in sorted(self.links.items()) if a != b],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SemilatticeOfGroups":
        links = {(e["from"], e["to"]): e["map"] for e in d.get("links", [])}
        return cls(d["meet"], [FiniteGroup.from_dict(g) for g in d["groups"]], links)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __repr__(self):
        return f"SemilatticeOfGroups(levels={self.levels}, groups={[G.name for G in self.groups]})"


def single_group(G: FiniteGroup) -> SemilatticeOfGroups:
    return SemilatticeOfGroups([[0]], [G], {})


def chain(groups: Sequence[FiniteGroup], steps: Sequence[Sequence[int]]) -> SemilatticeOfGroups:
    """Chain n-1 > ... > 1 > 0 where ``groups[k]`` sits at level k and
    ``steps[k]`` is the link G_{k+1} → G_k; longer links are composites."""
    m = len(groups)
    meet = [[min(a, b) for b in range(m)] for a in range(m)]
    links = {}
    for a in range(m):
        f = tuple(groups[a].elements())
        for b in range(a - 1, -1, -1):
            f = tuple(steps[b][x] for x in f)
            links[(a, b)] = f
    return SemilatticeOfGroups(meet, groups, links)


def vee(top_left: FiniteGroup, top_right: FiniteGroup, bottom: FiniteGroup, f, g) -> SemilatticeOfGroups:
    """Y = {0 (bottom), 1, 2} with 1 ∧ 2 = 0; links f: G_1 → G_0 and g: G_2 → G_0."""
    meet = [[0, 0, 0], [0, 1, 0], [0, 0, 2]]
    return SemilatticeOfGroups(meet, [bottom, top_left, top_right], {(1, 0): f, (2, 0): g})


# ---------------------------------------------------------------------
# indices


@dataclass(frozen=True)
class IndexReport:
    per_class: tuple
    sup: float
    green: int | None = None
    h_t_classes: int | None = None

    @property
    def finite(self) -> bool:
        return math.isfinite(self.sup)


def index(S: SemilatticeOfGroups, T) -> IndexReport:
    """[H_a : H_a ∩ T] for every level a, with [G : ∅] = |G|, and their sup."""
    T = frozenset(tuple(x) for x in T)
    if not S.is_subalgebra(T):
        raise CliffordError("T is not closed under product and inversion")
    per = []
    for a in range(S.levels):
        meet_t = sum(1 for x in T if x[0] == a)
        Ga = S.groups[a].order
        per.append(Ga if meet_t == 0 else Ga // meet_t)
    return IndexReport(tuple(per), max(per))


def green_index(S: SemilatticeOfGroups, T) -> IndexReport:
    """Green index of a subsemigroup T, with the ℋ^T-class count of S."""
    T = frozenset(tuple(x) for x in T)
    gi = finite.green_index(S.algebra, S.codes(T))
    try:
        base = index(S, T)
        per, sup = base.per_class, base.sup
    except CliffordError:
        per, sup = (), math.inf
    return IndexReport(per, sup, gi.value, gi.classes_total)


# ---------------------------------------------------------------------
# the retraction onto T ∩ H


@dataclass(frozen=True)
class RetractionReport:
    rk_g: int
    rk_c: int
    holds: bool
    t_prime: frozenset = field(repr=False, default=frozenset())
    psi: dict = field(repr=False, default_factory=dict)

    def __iter__(self):
        return iter((self.rk_g, self.rk_c, self.holds))


def rk_c(S: SemilatticeOfGroups, T, upper: int | None = None) -> int:
    """Least number of elements generating T under product and inversion."""
    return S.algebra.rank(S.codes(T), upper=upper)


def retraction_check(S: SemilatticeOfGroups, T, level: int, upper: int | None = None) -> RetractionReport:
    """Check ψ: t ↦ te (e the identity of H = H_level) and rk_G(T∩H) ≤ rk_C(T)."""
    T = frozenset(tuple(x) for x in T)
    e = S.identity(level)
    TH = frozenset(x for x in T if x[0] == level)
    if not TH:
        raise CliffordError("T ∩ H is empty")
    t_prime = frozenset(t for t in T if S.multiply(t, e)[0] == level)
    # fug3: t ∈ T' iff te is not strictly 𝒥-below e
    alg = S.algebra
    je = finite.principal_ideal(alg, S.code(e))
    for t in T:
        te = S.multiply(t, e)
        not_below = finite.principal_ideal(alg, S.code(te)) == je
        if not_below != (t in t_prime):
            raise AssertionError(f"T' test disagrees with 𝒥-order at {t}")
    psi = {t: (S.multiply(t, e) if t in t_prime else None) for t in T}
    for t in TH:
        if psi[t] != t:
            raise AssertionError(f"ψ moves {t} ∈ T ∩ H")
    for t in T:
        for u in T:
            lhs = psi[S.multiply(t, u)]
            a, b = psi[t], psi[u]
            rhs = None if a is None or b is None else S.multiply(a, b)
            if lhs != rhs:
                raise AssertionError(f"ψ is not a homomorphism at ({t}, {u})")
    G = S.groups[level]
    rk_g = min_rank(SubgroupHandle(G, frozenset(g for _, g in TH)), cap=max(G.order, 24))
    rc = rk_c(S, T, upper)
    return RetractionReport(rk_g, rc, rk_g <= rc, t_prime, psi)


# ---------------------------------------------------------------------
# endomorphisms


def validate_endo(S: SemilatticeOfGroups, phi) -> list[int]:
    if isinstance(phi, dict):
        m = [S.code(tuple(phi[x])) for x in S.elements()]
    else:
        phi = list(phi)
        m = [S.code(tuple(y)) for y in phi] if phi and not isinstance(phi[0], int) else phi
    try:
        S.algebra.check_endomorphism(m)
    except finite.NotHomomorphism as e:
        x, y = e.pair
        raise finite.NotHomomorphism((S.element(x), S.element(y))) from None
    return m


@dataclass(frozen=True)
class FixResult:
    elements: frozenset
    by_class: dict


def fix(S: SemilatticeOfGroups, phi) -> FixResult:
    m = validate_endo(S, phi)
    pts = [S.element(c) for c in finite.fixed_points(m)]
    return FixResult(frozenset(pts), finite.decompose(pts, lambda x: x[0]))


@dataclass(frozen=True)
class PerReport:
    k: int
    periodic: frozenset
    R: int

    def __iter__(self):
        return iter((self.k, self.periodic, self.R))


def per(S: SemilatticeOfGroups, phi) -> PerReport:
    m = validate_endo(S, phi)
    r = finite.periodic_points(m)
    return PerReport(r.k, frozenset(S.element(c) for c in r.periodic), r.R)


def level_image_chain(S: SemilatticeOfGroups, phi) -> list[frozenset]:
    """Semilattice levels met by S, Sφ, Sφ², ... until the image stabilizes."""
    m = validate_endo(S, phi)
    return [frozenset(S.element(c)[0] for c in step) for step in finite.image_chain(m)]


def collapse_endo(S: SemilatticeOfGroups, top: int, bottom: int) -> list[tuple]:
    """Send level ``top`` down along its link and fix everything else.

    An endomorphism when ``top`` is the unique cover of ``bottom`` in a chain
    and nothing lies above ``top``.
    """
    out = []
    for a, g in S.elements():
        out.append((bottom, S.links[(top, bottom)][g]) if a == top else (a, g))
    return out


# ---------------------------------------------------------------------
# random instances


def random_hom(rng, G: FiniteGroup, H: FiniteGroup) -> tuple:
    homs = homomorphisms(G, H)
    return homs[int(rng.integers(len(homs)))]


def random_instance(rng, max_order: int = 8) -> SemilatticeOfGroups:
    """A random 2-level chain, 3-level chain or V over library groups."""
    pool = library(max_order)
    pick = lambda: pool[int(rng.integers(len(pool)))]
    shape = int(rng.integers(3))
    if shape == 0:
        g0, g1 = pick(), pick()
        return chain([g0, g1], [random_hom(rng, g1, g0)])
    if shape == 1:
        g0, g1, g2 = pick(), pick(), pick()
        return chain([g0, g1, g2], [random_hom(rng, g1, g0), random_hom(rng, g2, g1)])
    b, l, r = pick(), pick(), pick()
    return vee(l, r, b, random_hom(rng, l, b), random_hom(rng, r, b))


def random_subalgebra(rng, S: SemilatticeOfGroups, max_gens: int = 3):
    k = 1 + int(rng.integers(max_gens))
    gens = [S.element(int(rng.integers(S.order))) for _ in range(k)]
    return gens, S.closure(gens)
