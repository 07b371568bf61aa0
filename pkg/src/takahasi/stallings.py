"""Finite automata over A ∪ A⁻¹ and Stallings graphs of free-group subgroups.

Edge labels use the involutive letter encoding of :mod:`takahasi.words`
(``2*i`` for a symbol, ``2*i + 1`` for its formal inverse).  Automata are
immutable; every transformation returns a new one.

The rank machinery follows the classical reduction of a trim automaton
to a Stallings graph: identify the terminal vertices with the base,
add the missing inverse edges, fold, and prune hanging vertices.  The
rank of the resulting subgroup is ``|E|/2 - |Q| + 1``.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .unionfind import UnionFind
from .words import Alphabet, Word, free_reduce


class AutomatonError(ValueError):
    pass


class NotAscendingError(ValueError):
    """Raised by chain checks; ``pair`` holds the 1-based indices (n, n+1)."""

    def __init__(self, pair, witness, message=None):
        self.pair = pair
        self.witness = witness
        super().__init__(message or f"chain not ascending at pair {pair}: witness {witness}")


def default_alphabet(rank: int) -> Alphabet:
    return Alphabet(tuple("abcdefghijklmnopqrstuvwxyz"[:rank]), involutive=True)


@dataclass(frozen=True)
class Automaton:
    vertices: frozenset
    base: Hashable
    terminals: frozenset
    edges: frozenset
    alphabet: Alphabet | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        if self.base not in self.vertices:
            raise AutomatonError("base vertex not in vertex set")
        if not self.terminals <= self.vertices:
            raise AutomatonError("terminals must be vertices")
        for p, _, q in self.edges:
            if p not in self.vertices or q not in self.vertices:
                raise AutomatonError(f"edge endpoint outside vertex set: {(p, _, q)}")

    @classmethod
    def build(cls, n_vertices, edges, base=0, terminals=None, alphabet=None):
        """Vertices ``0..n-1``; ``terminals`` defaults to ``{base}``."""
        if terminals is None:
            terminals = {base}
        return cls(frozenset(range(n_vertices)), base, frozenset(terminals), frozenset(edges), alphabet)

    # ---- structure -------------------------------------------------
    def out_map(self) -> dict:
        out = {v: [] for v in self.vertices}
        for p, a, q in self.edges:
            out[p].append((a, q))
        return out

    def outdegree(self, v) -> int:
        return sum(1 for p, _, _ in self.edges if p == v)

    def is_dual(self) -> bool:
        return all((q, a ^ 1, p) in self.edges for p, a, q in self.edges)

    def is_deterministic(self) -> bool:
        seen = set()
        for p, a, _ in self.edges:
            if (p, a) in seen:
                return False
            seen.add((p, a))
        return True

    def is_trim(self) -> bool:
        return self == trim(self) and not trim(self).is_degenerate

    def is_inverse(self) -> bool:
        return self.is_dual() and self.is_trim() and self.is_deterministic()

    def is_stallings(self) -> bool:
        if self.terminals != {self.base} or not self.is_inverse():
            return False
        return all(self.outdegree(v) != 1 for v in self.vertices if v != self.base)

    @property
    def is_degenerate(self) -> bool:
        """True for the empty-language automaton produced by :func:`trim`."""
        return not self.terminals

    def max_symbol(self) -> int:
        return max((a >> 1 for _, a, _ in self.edges), default=-1)

    def relabel(self) -> "Automaton":
        """Rename vertices to ``0..n-1`` in BFS order from the base."""
        order = {self.base: 0}
        out = self.out_map()
        queue = deque([self.base])
        while queue:
            v = queue.popleft()
            for a, q in sorted(out[v], key=lambda e: e[0]):
                if q not in order:
                    order[q] = len(order)
                    queue.append(q)
        for v in sorted(self.vertices - order.keys(), key=repr):
            order[v] = len(order)
        return Automaton(
            frozenset(order.values()),
            0,
            frozenset(order[t] for t in self.terminals),
            frozenset((order[p], a, order[q]) for p, a, q in self.edges),
            self.alphabet,
        )

    # ---- I/O -------------------------------------------------------
    def to_dict(self) -> dict:
        A = self.relabel()
        alpha = self.alphabet or default_alphabet(A.max_symbol() + 1)
        return {
            "alphabet": list(alpha.symbols),
            "vertices": len(A.vertices),
            "base": A.base,
            "terminals": sorted(A.terminals),
            "edges": [[p, alpha.name(a), q] for p, a, q in sorted(A.edges)],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Automaton":
        alpha = Alphabet(tuple(d["alphabet"]), involutive=True)
        edges = [(p, alpha.letter(lab), q) for p, lab, q in d["edges"]]
        return cls.build(d["vertices"], edges, d.get("base", 0), d.get("terminals"), alpha)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Automaton":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name="A") -> str:
        alpha = self.alphabet or default_alphabet(self.max_symbol() + 1)
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for v in sorted(self.vertices, key=repr):
            shape = "doublecircle" if v in self.terminals else "circle"
            style = ', style="bold"' if v == self.base else ""
            lines.append(f'  "{v}" [shape={shape}{style}];')
        for p, a, q in sorted(self.edges, key=repr):
            lines.append(f'  "{p}" -> "{q}" [label="{alpha.name(a)}"];')
        lines.append("}")
        return "\n".join(lines)


# ---------------------------------------------------------------------
# the reduction pipeline


def _reach(start: Iterable, adj: dict) -> set:
    seen = set(start)
    stack = list(seen)
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def trim(A: Automaton) -> Automaton:
    """Keep exactly the vertices and edges lying on some base-to-terminal path.

    With no successful path the result is the degenerate automaton
    ``({q0}, q0, ∅, ∅)``.
    """
    fwd, bwd = {}, {}
    for p, _, q in A.edges:
        fwd.setdefault(p, []).append(q)
        bwd.setdefault(q, []).append(p)
    reach = _reach([A.base], fwd)
    coreach = _reach(A.terminals, bwd)
    keep = reach & coreach
    if A.base not in keep:
        return Automaton(frozenset([A.base]), A.base, frozenset(), frozenset(), A.alphabet)
    edges = frozenset(e for e in A.edges if e[0] in keep and e[2] in keep)
    return Automaton(frozenset(keep), A.base, A.terminals & keep, edges, A.alphabet)


def identify_terminals(A: Automaton) -> Automaton:
    """Merge every terminal vertex into the base; the result has T = {q0}."""
    m = {t: A.base for t in A.terminals}
    f = lambda v: m.get(v, v)  # noqa: E731
    return Automaton(
        frozenset(f(v) for v in A.vertices),
        A.base,
        frozenset([A.base]),
        frozenset((f(p), a, f(q)) for p, a, q in A.edges),
        A.alphabet,
    )


def dualize(A: Automaton) -> Automaton:
    edges = set(A.edges)
    edges |= {(q, a ^ 1, p) for p, a, q in A.edges}
    return Automaton(A.vertices, A.base, A.terminals, frozenset(edges), A.alphabet)


def fold(A: Automaton, rng: random.Random | None = None) -> Automaton:
    """Stallings foldings: merge targets of equally labelled edges from one vertex.

    Worklist of conflicting targets with union-find merging.  ``rng``
    shuffles both the edge insertion order and the order in which pending
    merges are processed; the result does not depend on it.
    """
    uf = UnionFind(A.vertices)
    out: dict = {v: {} for v in A.vertices}
    pending: list = []

    def insert(p, a, q):
        p = uf.find(p)
        t = out[p].get(a)
        if t is None:
            out[p][a] = q
        elif uf.find(t) != uf.find(q):
            pending.append((t, q))

    edges = list(A.edges)
    if rng is not None:
        rng.shuffle(edges)
    else:
        edges.sort(key=repr)
    for e in edges:
        insert(*e)
    while pending:
        if rng is not None:
            k = rng.randrange(len(pending))
            pending[k], pending[-1] = pending[-1], pending[k]
        x, y = pending.pop()
        merged = uf.union(x, y)
        if merged is None:
            continue
        keep, gone = merged
        for a, q in out.pop(gone).items():
            insert(keep, a, q)

    f = uf.find
    return Automaton(
        frozenset(f(v) for v in A.vertices),
        f(A.base),
        frozenset(f(t) for t in A.terminals),
        frozenset((f(p), a, f(q)) for p, a, q in A.edges),
        A.alphabet,
    )


def prune(A: Automaton) -> Automaton:
    """Repeatedly delete non-base vertices of outdegree 1 (and their edges)."""
    vertices = set(A.vertices)
    edges = set(A.edges)
    out = {v: set() for v in vertices}
    inc = {v: set() for v in vertices}
    for e in edges:
        out[e[0]].add(e)
        inc[e[2]].add(e)
    queue = deque(v for v in vertices if v != A.base and len(out[v]) <= 1)
    while queue:
        v = queue.popleft()
        if v not in vertices or len(out[v]) > 1:
            continue
        vertices.discard(v)
        touched = set()
        for e in out[v] | inc[v]:
            if e in edges:
                edges.discard(e)
                out[e[0]].discard(e)
                inc[e[2]].discard(e)
                touched.update((e[0], e[2]))
        touched.discard(v)
        for u in touched:
            if u != A.base and u in vertices and len(out[u]) <= 1:
                queue.append(u)
    return Automaton(frozenset(vertices), A.base, A.terminals & vertices, frozenset(edges), A.alphabet)


@dataclass(frozen=True)
class RankReport:
    rank: int
    edge_count: int
    vertex_count: int
    terminal_count: int


@dataclass(frozen=True)
class PipelineResult:
    a1: Automaton
    a2: Automaton
    a3: Automaton
    a4: Automaton
    report: RankReport

    @property
    def graph(self) -> "StallingsGraph":
        return StallingsGraph(self.a4)


def pipeline(A: Automaton, rng: random.Random | None = None) -> PipelineResult:
    """Trim automaton → (A1, A2, A3, A4, rank report); A4 is a Stallings graph."""
    if trim(A).is_degenerate:
        raise AutomatonError("automaton recognises the empty language")
    if trim(A) != A:
        raise AutomatonError("pipeline expects a trim automaton; call trim() first")
    a1 = identify_terminals(A)
    a2 = dualize(a1)
    a3 = fold(a2, rng)
    a4 = prune(a3)
    rank = len(a4.edges) // 2 - len(a4.vertices) + 1
    report = RankReport(rank, len(a4.edges), len(a4.vertices), len(a4.terminals))
    return PipelineResult(a1, a2, a3, a4, report)


def ragr_bound(A: Automaton) -> int:
    """Upper bound for the rank of the subgroup generated by L(A).

    ``|E| - |Q| + |{q0} ∪ T|`` when A is trim, otherwise ``|E|``.
    """
    if trim(A) == A and not A.is_degenerate:
        return len(A.edges) - len(A.vertices) + len({A.base} | A.terminals)
    return len(A.edges)


# ---------------------------------------------------------------------
# Stallings graphs


class StallingsGraph:
    """A folded, trim, dual automaton with T = {q0}; represents a subgroup."""

    def __init__(self, automaton: Automaton, check: bool = True):
        A = automaton.relabel()
        if check and A.edges and not A.is_stallings():
            raise AutomatonError("automaton is not a Stallings graph")
        if check and not A.edges and len(A.vertices) != 1:
            raise AutomatonError("edgeless Stallings graph must have one vertex")
        self.automaton = A
        self.delta = {(p, a): q for p, a, q in A.edges}

    @property
    def vertex_count(self) -> int:
        return len(self.automaton.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.automaton.edges)

    @property
    def rank(self) -> int:
        return self.edge_count // 2 - self.vertex_count + 1

    def report(self) -> RankReport:
        return RankReport(self.rank, self.edge_count, self.vertex_count, 1)

    def read(self, w) -> Hashable | None:
        v = self.automaton.base
        for x in w:
            v = self.delta.get((v, x))
            if v is None:
                return None
        return v

    def member(self, w) -> bool:
        w = free_reduce(w.letters if isinstance(w, Word) else tuple(w))
        return self.read(w) == self.automaton.base

    __contains__ = member

    def basis(self) -> list[tuple[int, ...]]:
        """Free basis from a BFS spanning tree: one word per non-tree positive edge."""
        A = self.automaton
        tree = {A.base: ()}
        tree_edges = set()
        queue = deque([A.base])
        out = A.out_map()
        while queue:
            v = queue.popleft()
            for a, q in sorted(out[v]):
                if q not in tree:
                    tree[q] = tree[v] + (a,)
                    tree_edges.add((v, a, q))
                    tree_edges.add((q, a ^ 1, v))
                    queue.append(q)
        gens = []
        for p, a, q in sorted(A.edges):
            if a & 1 or (p, a, q) in tree_edges:
                continue
            gens.append(free_reduce(tree[p] + (a,) + tuple(x ^ 1 for x in reversed(tree[q]))))
        return gens

    def canonical_form(self):
        return canonical_form(self.automaton)

    def __eq__(self, other):
        return isinstance(other, StallingsGraph) and self.canonical_form() == other.canonical_form()

    def __hash__(self):
        return hash(self.canonical_form())

    def __repr__(self):
        return f"StallingsGraph(rank={self.rank}, |Q|={self.vertex_count}, |E|={self.edge_count})"


def _rooted_code(out: dict, root, terminals) -> tuple:
    order = {root: 0}
    queue = deque([root])
    code = []
    while queue:
        v = queue.popleft()
        for a, q in sorted(out[v], key=lambda e: e[0]):
            if q not in order:
                order[q] = len(order)
                queue.append(q)
            code.append((order[v], a, order[q]))
    marks = tuple(sorted(order[t] for t in terminals if t in order))
    return (len(order), tuple(code), marks)


def canonical_form(A: Automaton) -> tuple:
    """Isomorphism invariant of a deterministic based automaton.

    The base component is coded by BFS from the base with edges visited in
    label order; other components by the least code over all roots.
    """
    if not A.is_deterministic():
        raise AutomatonError("canonical form needs a deterministic automaton")
    out = A.out_map()
    undirected = {v: set() for v in A.vertices}
    for p, _, q in A.edges:
        undirected[p].add(q)
        undirected[q].add(p)
    base_comp = _reach([A.base], undirected)
    main = _rooted_code(out, A.base, A.terminals)
    rest, seen = [], set(base_comp)
    for v in sorted(A.vertices, key=repr):
        if v in seen:
            continue
        comp = _reach([v], undirected)
        seen |= comp
        rest.append(min(_rooted_code(out, r, A.terminals) for r in comp))
    return (main, tuple(sorted(rest)))


def bouquet(generators: Sequence, alphabet: Alphabet | None = None) -> Automaton:
    """One petal per generator word, all petals through the base vertex 0."""
    edges = set()
    n = 1
    for g in generators:
        w = free_reduce(g.letters if isinstance(g, Word) else tuple(g))
        if not w:
            continue
        prev = 0
        for k, x in enumerate(w):
            if k == len(w) - 1:
                nxt = 0
            else:
                nxt = n
                n += 1
            edges.add((prev, x, nxt))
            edges.add((nxt, x ^ 1, prev))
            prev = nxt
    return Automaton.build(n, edges, alphabet=alphabet)


def subgroup(generators: Sequence, alphabet: Alphabet | None = None, rng=None) -> StallingsGraph:
    """Stallings graph of the subgroup generated by ``generators`` (empty → trivial)."""
    return StallingsGraph(prune(fold(bouquet(generators, alphabet), rng)))


def membership(G: StallingsGraph, w) -> bool:
    return G.member(w)


def subgroup_of_automaton(A: Automaton) -> StallingsGraph:
    return pipeline(trim(A)).graph


@dataclass(frozen=True)
class ChainReport:
    ranks: tuple[int, ...]
    stabilized_at: int
    witnessed: bool
    bounded: bool | None


def chain_check(chain: Sequence[Sequence], max_rank: int | None = None) -> ChainReport:
    """Verify H_1 ≤ H_2 ≤ ... and locate where the supplied prefix stops changing.

    ``stabilized_at`` is the least 1-based p with H_p = H_{p+1} = ... = H_last;
    ``witnessed`` says whether at least one equality H_p = H_{p+1} was seen.
    """
    if not chain:
        raise ValueError("empty chain")
    graphs = [subgroup(gens) for gens in chain]
    for n in range(len(chain) - 1):
        for w in chain[n]:
            if not graphs[n + 1].member(w):
                raise NotAscendingError((n + 1, n + 2), tuple(w))
    p = len(chain)
    while p > 1 and graphs[p - 2] == graphs[p - 1]:
        p -= 1
    ranks = tuple(G.rank for G in graphs)
    bounded = None if max_rank is None else all(r <= max_rank for r in ranks)
    return ChainReport(ranks, p, p < len(chain), bounded)
