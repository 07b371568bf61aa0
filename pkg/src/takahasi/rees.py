"""Rees matrix semigroups M[G, I, Λ, P] over finite groups.

Elements are triples ``(i, g, lam)`` with 0-based indices; the sandwich
matrix is indexed ``P[lam][i]``.  Internally each triple has an integer
code so the generic machinery in :mod:`takahasi.finite` applies.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import finite
from .groups import FiniteGroup, GroupError, SubgroupHandle, min_rank


class ReesError(ValueError):
    pass


class ReesStructure:
    def __init__(self, group: FiniteGroup, n_i: int, n_lambda: int, P):
        if n_i < 1 or n_lambda < 1:
            raise ReesError("index sets must be nonempty")
        P = [list(map(int, row)) for row in P]
        if len(P) != n_lambda or any(len(row) != n_i for row in P):
            raise ReesError(f"sandwich matrix must be {n_lambda}×{n_i} (Λ×I)")
        if any(not 0 <= x < group.order for row in P for x in row):
            raise ReesError("sandwich entries must be group elements")
        self.G = group
        self.n_i = n_i
        self.n_lambda = n_lambda
        self.P = P

    # element coding: ((i * |G|) + g) * |Λ| + lam
    def code(self, x) -> int:
        i, g, lam = x
        if not (0 <= i < self.n_i and 0 <= g < self.G.order and 0 <= lam < self.n_lambda):
            raise ReesError(f"{x} is not an element")
        return (i * self.G.order + g) * self.n_lambda + lam

    def element(self, c: int) -> tuple[int, int, int]:
        rest, lam = divmod(c, self.n_lambda)
        i, g = divmod(rest, self.G.order)
        return (i, g, lam)

    @property
    def order(self) -> int:
        return self.n_i * self.G.order * self.n_lambda

    def elements(self):
        return [self.element(c) for c in range(self.order)]

    def multiply(self, x, y):
        i, g, lam = x
        j, h, mu = y
        G = self.G
        return (i, G.mul(G.mul(g, self.P[lam][j]), h), mu)

    def unary(self, x):
        i, g, lam = x
        G = self.G
        p_inv = G.inv(self.P[lam][i])
        return (i, G.mul(G.mul(p_inv, G.inv(g)), p_inv), lam)

    @cached_property
    def algebra(self) -> finite.FiniteAlgebra:
        els = self.elements()
        mul = [[self.code(self.multiply(x, y)) for y in els] for x in els]
        return finite.FiniteAlgebra(mul, [self.code(self.unary(x)) for x in els])

    def codes(self, xs) -> list[int]:
        return [self.code(tuple(x)) for x in xs]

    def closure(self, A) -> "CSSub":
        A = [tuple(x) for x in A]
        if not A:
            raise ReesError("closure needs at least one generator")
        T = self.algebra.closure(self.codes(A))
        return CSSub(self, tuple(A), frozenset(self.element(c) for c in T))

    def to_dict(self) -> dict:
        return {"group": self.G.to_dict(), "I": self.n_i, "Lambda": self.n_lambda, "P": self.P}

    @classmethod
    def from_dict(cls, d: dict) -> "ReesStructure":
        return cls(FiniteGroup.from_dict(d["group"]), d["I"], d["Lambda"], d["P"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __repr__(self):
        return f"ReesStructure({self.G.name}, I={self.n_i}, Lambda={self.n_lambda}, P={self.P})"


@dataclass(frozen=True)
class CSSub:
    S: ReesStructure
    generators: tuple
    elements: frozenset

    @property
    def I_A(self) -> frozenset:
        return frozenset(x[0] for x in self.generators)

    @property
    def Lambda_A(self) -> frozenset:
        return frozenset(x[2] for x in self.generators)

    @property
    def I_T(self) -> frozenset:
        return frozenset(x[0] for x in self.elements)

    @property
    def Lambda_T(self) -> frozenset:
        return frozenset(x[2] for x in self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return tuple(x) in self.elements


def component(T: CSSub, i: int, lam: int) -> frozenset:
    """T ∩ ({i} × G × {λ})."""
    if i not in T.I_T or lam not in T.Lambda_T:
        raise ReesError(f"(i, λ) = ({i}, {lam}) is outside I_T × Λ_T")
    return frozenset(x for x in T.elements if x[0] == i and x[2] == lam)


def component_iso(S: ReesStructure, T: CSSub, i: int, lam: int) -> SubgroupHandle:
    """Image of T ∩ ({i}×G×{λ}) under (i, g, λ) ↦ g·p_{λi}, checked to be a subgroup."""
    comp = component(T, i, lam)
    G = S.G
    p = S.P[lam][i]
    image = frozenset(G.mul(g, p) for _, g, _ in comp)
    if len(image) != len(comp):
        raise AssertionError("component map is not injective")
    H = SubgroupHandle(G, image)
    if not H.is_closed():
        raise AssertionError("component image is not a subgroup")
    return H


@dataclass(frozen=True)
class GAutomaton:
    """States: ``"q0"``, each λ in Λ_A (as ints) and ``"t"``; edges labeled by G."""

    group: FiniteGroup
    states: tuple
    edges: frozenset

    def language(self) -> frozenset:
        """Products of path labels from q0 to t (BFS over state × group pairs)."""
        G = self.group
        out_edges: dict = {}
        for src, g, dst in self.edges:
            out_edges.setdefault(src, []).append((g, dst))
        start = ("q0", G.identity)
        seen = {start}
        queue = deque([start])
        hits = set()
        while queue:
            q, x = queue.popleft()
            for g, dst in out_edges.get(q, ()):
                y = (dst, G.mul(x, g))
                if dst == "t":
                    hits.add(y[1])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(hits)

    def path_labels(self, max_len: int) -> frozenset:
        """Label products of q0→t paths with at most ``max_len`` edges."""
        G = self.group
        out_edges: dict = {}
        for src, g, dst in self.edges:
            out_edges.setdefault(src, []).append((g, dst))
        layer = {("q0", G.identity)}
        hits = set()
        for _ in range(max_len):
            nxt = set()
            for q, x in layer:
                for g, dst in out_edges.get(q, ()):
                    if dst == "t":
                        hits.add(G.mul(x, g))
                    else:
                        nxt.add((dst, G.mul(x, g)))
            layer = nxt
        return frozenset(hits)

    def is_trim(self) -> bool:
        fwd, back = {}, {}
        for src, _, dst in self.edges:
            fwd.setdefault(src, set()).add(dst)
            back.setdefault(dst, set()).add(src)

        def reach(start, adj):
            seen, stack = {start}, [start]
            while stack:
                for y in adj.get(stack.pop(), ()):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            return seen

        return reach("q0", fwd) >= set(self.states) and reach("t", back) >= set(self.states)


def build_g_automaton(S: ReesStructure, A, i: int, lam: int) -> GAutomaton:
    A = [tuple(x) for x in A]
    I_A = {x[0] for x in A}
    L_A = sorted({x[2] for x in A})
    if i not in I_A or lam not in L_A:
        raise ReesError(f"(i, λ) = ({i}, {lam}) is outside I_A × Λ_A")
    G = S.G
    edges = set()
    for i1, g, lam1 in A:
        if i1 == i:
            edges.add(("q0", g, lam1))
    for lam1 in L_A:
        for i1, g, lam2 in A:
            edges.add((lam1, G.mul(S.P[lam1][i1], g), lam2))
    edges.add((lam, S.P[lam][i], "t"))
    return GAutomaton(G, ("q0", *L_A, "t"), frozenset(edges))


def rk_cs(S: ReesStructure, T: CSSub, max_size: int = 64, max_subset: int = 4) -> int:
    """Least number of elements of T generating T under product and unary."""
    codes = S.codes(T.elements)
    known = len(set(T.generators))
    return S.algebra.rank(codes, upper=known, max_size=max_size, max_subset=max_subset)


@dataclass(frozen=True)
class RankBound:
    rk_cs: int
    rk_component: int
    bound_holds: bool

    def __iter__(self):
        return iter((self.rk_cs, self.rk_component, self.bound_holds))


def rank_bound_check(S: ReesStructure, A, i: int, lam: int, cap: int | None = None) -> RankBound:
    """rk_G(T^(iλ)) against rk_CS(T)² + 1 for T the closure of A."""
    T = S.closure(A)
    r = rk_cs(S, T)
    H = component_iso(S, T, i, lam)
    rc = min_rank(H, cap=cap)
    return RankBound(r, rc, rc <= r * r + 1)


# ---------------------------------------------------------------------
# endomorphisms


def _as_code_map(S: ReesStructure, phi) -> list[int]:
    if isinstance(phi, dict):
        return [S.code(tuple(phi[x])) for x in S.elements()]
    phi = list(phi)
    if phi and not isinstance(phi[0], int):
        return [S.code(tuple(y)) for y in phi]
    return phi


def validate_endo(S: ReesStructure, phi) -> list[int]:
    """Check a total element map (dict of triples, list of triples or codes)."""
    m = _as_code_map(S, phi)
    try:
        S.algebra.check_endomorphism(m)
    except finite.NotHomomorphism as e:
        x, y = e.pair
        raise finite.NotHomomorphism((S.element(x), S.element(y))) from None
    return m


def endo_from_generators(S: ReesStructure, gens, images) -> list[int]:
    return S.algebra.extend(S.codes(gens), S.codes(images))


@dataclass(frozen=True)
class FixResult:
    elements: frozenset
    by_class: dict

    def __len__(self):
        return len(self.elements)


def fix(S: ReesStructure, phi) -> FixResult:
    """Fixed points, split by ℋ-class {i}×G×{λ}."""
    m = validate_endo(S, phi)
    pts = [S.element(c) for c in finite.fixed_points(m)]
    return FixResult(frozenset(pts), finite.decompose(pts, lambda x: (x[0], x[2])))


@dataclass(frozen=True)
class PerReport:
    k: int
    periodic: frozenset
    R: int

    def __iter__(self):
        return iter((self.k, self.periodic, self.R))


def per(S: ReesStructure, phi) -> PerReport:
    m = validate_endo(S, phi)
    r = finite.periodic_points(m)
    return PerReport(r.k, frozenset(S.element(c) for c in r.periodic), r.R)


def fix_power(S: ReesStructure, phi, n: int) -> frozenset:
    m = validate_endo(S, phi)
    return frozenset(S.element(c) for c in finite.fixed_points(finite.compose_power(m, n)))


def endo_to_json(S: ReesStructure, phi) -> str:
    m = _as_code_map(S, phi)
    return json.dumps({"map": [list(S.element(c)) for c in m]})


def endo_from_json(S: ReesStructure, text: str) -> list[int]:
    """``{"map": [[i,g,l], ...]}`` or ``{"generators": [...], "images": [...]}``."""
    d = json.loads(text) if isinstance(text, str) else text
    if "map" in d:
        return validate_endo(S, [tuple(x) for x in d["map"]])
    return endo_from_generators(S, [tuple(x) for x in d["generators"]], [tuple(x) for x in d["images"]])


def random_structure(rng, group: FiniteGroup, n_i: int, n_lambda: int) -> ReesStructure:
    P = [[int(rng.integers(group.order)) for _ in range(n_i)] for _ in range(n_lambda)]
    return ReesStructure(group, n_i, n_lambda, P)


def random_element(rng, S: ReesStructure):
    return S.element(int(rng.integers(S.order)))


__all__ = [
    "ReesStructure", "ReesError", "CSSub", "GAutomaton", "RankBound", "FixResult", "PerReport",
    "component", "component_iso", "build_g_automaton", "rk_cs", "rank_bound_check",
    "validate_endo", "endo_from_generators", "fix", "per", "fix_power", "GroupError",
]
