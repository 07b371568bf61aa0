"""Balanced finitely presented monoids and semigroups.

Words are tuples of letter codes ``0..k-1``.  Since every relation has
equal-length sides, a congruence class consists of words of one length,
so equality is decided length by length.  For a length ``n`` with
``k**n`` small enough the whole class partition is computed at once:
words are encoded as base-``k`` integers (first letter most significant,
so integer order is lexicographic order) and relation applications are
the edges of a graph whose connected components are the classes.  The
smallest index in a component is its shortlex-least word.  Longer words
fall back to a breadth-first search of their class.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import factorial, lcm
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .words import Alphabet

TABLE_LIMIT = 2_000_000
DEFAULT_CAP = 1_000_000


class PresentationError(ValueError):
    pass


class ClassCapExceeded(PresentationError):
    pass


class EndoError(PresentationError):
    def __init__(self, relation: int, left, right, message: str):
        self.relation = relation
        self.left = left
        self.right = right
        super().__init__(message)


class Presentation:
    """⟨A | u_i = v_i⟩ with |u_i| = |v_i|; ``flavor`` is "monoid" or "semigroup"."""

    def __init__(self, alphabet: Alphabet, relations: Sequence, flavor: str = "monoid"):
        if flavor not in ("monoid", "semigroup"):
            raise PresentationError(f"unknown flavor {flavor!r}")
        if alphabet.involutive:
            raise PresentationError("presentations use a plain alphabet")
        rels = []
        for u, v in relations:
            u, v = tuple(u), tuple(v)
            if len(u) != len(v):
                raise PresentationError(f"relation {u} = {v} is not balanced")
            if flavor == "semigroup" and not u:
                raise PresentationError("semigroup relations need nonempty sides")
            rels.append((u, v))
        self.alphabet = alphabet
        self.k = len(alphabet)
        self.relations = tuple(rels)
        self.flavor = flavor
        self._tables: dict[int, np.ndarray] = {}
        self._canonicals: dict[int, np.ndarray] = {}
        self._digits: dict[int, np.ndarray] = {}
        self._bfs_cache: dict = {}

    # -- text --------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """``monoid a b c ; cac = cbc`` (``<a b c>`` and ``,`` also accepted)."""
        parts = [p.strip() for p in re.split(r"[;\n]", text) if p.strip()]
        if not parts:
            raise PresentationError("empty presentation")
        head = parts[0].split(None, 1)
        flavor = head[0]
        if flavor not in ("monoid", "semigroup"):
            raise PresentationError("presentation must start with 'monoid' or 'semigroup'")
        names = head[1] if len(head) > 1 else ""
        names = names.strip().lstrip("<").rstrip(">").replace(",", " ").split()
        alphabet = Alphabet(tuple(names))
        rels = []
        for rel in parts[1:]:
            if "=" not in rel:
                raise PresentationError(f"relation {rel!r} has no '='")
            u, v = rel.split("=", 1)
            rels.append((alphabet.parse(u), alphabet.parse(v)))
        return cls(alphabet, rels, flavor)

    def __str__(self):
        rels = " ; ".join(f"{self.fmt(u)} = {self.fmt(v)}" for u, v in self.relations)
        head = f"{self.flavor} " + " ".join(self.alphabet.symbols)
        return head + (" ; " + rels if rels else "")

    def fmt(self, w) -> str:
        if not w:
            return "1"
        sep = "" if all(len(s) == 1 for s in self.alphabet.symbols) else " "
        return sep.join(self.alphabet.symbols[x] for x in w)

    def word(self, text: str) -> tuple[int, ...]:
        return self.alphabet.parse(text)

    def to_dict(self) -> dict:
        return {
            "flavor": self.flavor,
            "alphabet": list(self.alphabet.symbols),
            "relations": [[self.alphabet.format(u), self.alphabet.format(v)] for u, v in self.relations],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Presentation":
        alphabet = Alphabet(tuple(d["alphabet"]))
        rels = [(alphabet.parse(u), alphabet.parse(v)) for u, v in d.get("relations", [])]
        return cls(alphabet, rels, d.get("flavor", "monoid"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    # -- word problem -------------------------------------------------

    def index(self, w) -> int:
        x = 0
        for a in w:
            x = x * self.k + a
        return x

    def unindex(self, x: int, n: int) -> tuple[int, ...]:
        out = []
        for _ in range(n):
            x, a = divmod(x, self.k)
            out.append(a)
        return tuple(reversed(out))

    def has_table(self, n: int) -> bool:
        return n in self._tables or self.k ** n <= TABLE_LIMIT

    def table(self, n: int) -> np.ndarray:
        """``t[i]`` is the index of the shortlex-least word in the class of word ``i``."""
        t = self._tables.get(n)
        if t is None:
            t = self._build_table(n)
            self._tables[n] = t
        return t

    def _build_table(self, n: int) -> np.ndarray:
        k = self.k
        size = k ** n
        if size > TABLE_LIMIT:
            raise ClassCapExceeded(f"{k}^{n} words exceed the table limit {TABLE_LIMIT}")
        idx = np.arange(size, dtype=np.int64)
        src, dst = [], []
        for u, v in self.relations:
            m = len(u)
            if m == 0 or m > n or u == v:
                continue
            cu, cv = self.index(u), self.index(v)
            for i in range(n - m + 1):
                scale = k ** (n - i - m)
                seg = (idx // scale) % (k ** m)
                hit = idx[seg == cu]
                src.append(hit)
                dst.append(hit + (cv - cu) * scale)
        if not src:
            return idx
        src = np.concatenate(src)
        dst = np.concatenate(dst)
        g = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(size, size))
        _, labels = connected_components(g, directed=False)
        least = np.full(labels.max() + 1, size, dtype=np.int64)
        np.minimum.at(least, labels, idx)
        return least[labels]

    def congruence_class(self, w, cap: int = DEFAULT_CAP) -> set:
        """All words obtained from ``w`` by applying relations in either direction."""
        w = tuple(w)
        rules = [(u, v) for u, v in self.relations if u != v and u]
        rules += [(v, u) for u, v in rules]
        seen = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for u, v in rules:
                m = len(u)
                for i in range(len(x) - m + 1):
                    if x[i:i + m] == u:
                        y = x[:i] + v + x[i + m:]
                        if y not in seen:
                            seen.add(y)
                            if len(seen) > cap:
                                raise ClassCapExceeded(f"class of {w} exceeds {cap} words")
                            queue.append(y)
        return seen

    def canonical(self, w, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        w = tuple(w)
        n = len(w)
        if self.has_table(n):
            return self.unindex(int(self.table(n)[self.index(w)]), n)
        hit = self._bfs_cache.get(w)
        if hit is None:
            cls_ = self.congruence_class(w, cap)
            hit = min(cls_)
            for x in cls_:
                self._bfs_cache[x] = hit
        return hit

    def equal(self, u, v) -> bool:
        return len(u) == len(v) and self.canonical(u) == self.canonical(v)

    def canonicals(self, n: int) -> np.ndarray:
        """Indices of the canonical words of length ``n`` (sorted)."""
        out = self._canonicals.get(n)
        if out is None:
            t = self.table(n)
            out = self._canonicals[n] = np.nonzero(t == np.arange(len(t)))[0]
        return out

    def j_above(self, w) -> set:
        """Canonical forms of every factor of every word in the class of ``w``."""
        w = tuple(w)
        if self.flavor == "semigroup" and not w:
            raise PresentationError("the empty word is not an element of a semigroup")
        out = set()
        for x in self.congruence_class(w):
            for i in range(len(x) + 1):
                for j in range(i, len(x) + 1):
                    f = x[i:j]
                    if f or self.flavor == "monoid":
                        out.add(self.canonical(f))
        return out

    def elements_count(self, n: int) -> int:
        return len(self.canonicals(n))


def presentation(text: str) -> Presentation:
    return Presentation.parse(text)


# ---------------------------------------------------------------------
# endomorphisms


@dataclass(frozen=True)
class Endo:
    P: Presentation = field(repr=False)
    images: tuple

    def apply(self, w) -> tuple[int, ...]:
        out = []
        for a in w:
            out.extend(self.images[a])
        return tuple(out)

    def power(self, n: int, cap: int | None = None) -> "Endo":
        """φ^n as generator images.

        Without ``cap`` the images are raw substitutions.  With ``cap`` each
        step reduces images of length ≤ cap to canonical words.  Longer
        images stay raw when a letter is erased; otherwise lengths never
        decrease, so they are replaced by a placeholder of length cap + 1.
        """
        imgs = tuple((a,) for a in range(self.P.k))
        erasing = self.erases()
        for _ in range(n):
            imgs = tuple(self.apply(w) for w in imgs)
            if cap is not None:
                imgs = tuple(
                    self.P.canonical(w) if len(w) <= cap else w if erasing else (0,) * (cap + 1)
                    for w in imgs)
        return Endo(self.P, imgs)

    def erases(self) -> bool:
        return any(len(w) == 0 for w in self.images)

    def length_preserving(self) -> bool:
        return all(len(w) == 1 for w in self.images)

    def __str__(self):
        return " ; ".join(
            f"{self.P.alphabet.symbols[a]} -> {self.P.fmt(w)}" for a, w in enumerate(self.images))


def parse_endo(P: Presentation, text: str) -> tuple:
    """``a -> b ; b -> a ; c -> 1`` into a tuple of image words."""
    images = {}
    for part in re.split(r"[;\n,]", text):
        part = part.strip()
        if not part:
            continue
        if "->" not in part:
            raise PresentationError(f"endomorphism clause {part!r} has no '->'")
        a, img = (s.strip() for s in part.split("->", 1))
        images[P.alphabet.letter(a)] = P.alphabet.parse(img)
    missing = [P.alphabet.symbols[a] for a in range(P.k) if a not in images]
    if missing:
        raise PresentationError(f"no image given for {missing}")
    return tuple(images[a] for a in range(P.k))


def validate_endo(P: Presentation, images) -> Endo:
    """Check that the generator map respects every relation."""
    if isinstance(images, str):
        images = parse_endo(P, images)
    images = tuple(tuple(w) for w in images)
    if len(images) != P.k:
        raise PresentationError("one image per generator")
    if P.flavor == "semigroup" and any(not w for w in images):
        raise PresentationError("empty images are not allowed in a semigroup")
    phi = Endo(P, images)
    for r, (u, v) in enumerate(P.relations):
        pu, pv = phi.apply(u), phi.apply(v)
        if not P.equal(pu, pv):
            cu = P.canonical(pu) if P.has_table(len(pu)) or len(pu) < 16 else pu
            cv = P.canonical(pv) if P.has_table(len(pv)) or len(pv) < 16 else pv
            raise EndoError(
                r, cu, cv,
                f"relation {r} ({P.fmt(u)} = {P.fmt(v)}) maps to {P.fmt(cu)} ≠ {P.fmt(cv)}",
            )
    return phi


def is_endo(P: Presentation, images) -> bool:
    try:
        validate_endo(P, images)
    except EndoError:
        return False
    return True


def _digits(P: Presentation, idx: np.ndarray, n: int) -> np.ndarray:
    """Letters of the words with indices ``idx``, one row per position."""
    canon = P._canonicals.get(n)
    if canon is idx:
        hit = P._digits.get(n)
        if hit is not None:
            return hit
    powers = P.k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    d = (idx[None, :] // powers[:, None]) % P.k
    if canon is idx:
        P._digits[n] = d
    return d


def _image_indices(P: Presentation, phi: Endo, idx: np.ndarray, n: int, limit: int):
    """Index and length of wφ for the words of length ``n`` with indices ``idx``.

    Indices are only meaningful where the image length is at most ``limit``.
    """
    k = P.k
    # an image longer than the limit pushes every word containing it out of range
    img_code = np.array([P.index(w) if len(w) <= limit else 0 for w in phi.images], dtype=np.int64)
    img_len = np.array([len(w) for w in phi.images], dtype=np.int64)
    if n == 0:
        return np.zeros(len(idx), dtype=np.int64), np.zeros(len(idx), dtype=np.int64)
    d = _digits(P, idx, n)
    lens = img_len[d]
    length = lens.sum(axis=0)
    # letters after position j shift its image left by their total length
    after = length[None, :] - np.cumsum(lens, axis=0)
    ok = length <= limit
    shift = np.where(ok[None, :], after, 0)
    scale = k ** np.arange(max(limit, 0) + 1, dtype=np.int64)
    out = (img_code[d] * scale[shift]).sum(axis=0)
    return np.where(ok, out, 0), length


def image_canonicals(P: Presentation, phi: Endo, n: int, idx: np.ndarray, limit: int | None = None):
    """(length, canonical index) of wφ for the given words of length ``n``.

    Images longer than ``limit`` (default ``n``) get index -1.
    """
    limit = n if limit is None else limit
    out, length = _image_indices(P, phi, idx, n, limit)
    canon = np.full(len(idx), -1, dtype=np.int64)
    for m in np.unique(length):
        m = int(m)
        if m > limit:
            continue
        sel = length == m
        canon[sel] = P.table(m)[out[sel]]
    return length, canon


@dataclass(frozen=True)
class FixReport:
    L: int
    fixed: dict          # length -> sorted canonical indices
    indecomposables: tuple
    P: Presentation = field(repr=False, default=None)

    @property
    def rank_at_L(self) -> int:
        return len(self.indecomposables)

    def fixed_words(self) -> list:
        return [self.P.unindex(int(x), n) for n in sorted(self.fixed) for x in self.fixed[n]]

    def count(self) -> int:
        return sum(len(v) for v in self.fixed.values())


def graded_indecomposables(P: Presentation, members: dict) -> list:
    """Members not equal to a product of two shorter nonempty members.

    ``members`` maps length to an array of canonical indices; the set is
    assumed closed under products of total length within range.
    """
    k = P.k
    out = []
    for n in sorted(members):
        if n == 0:
            continue
        here = np.asarray(members[n], dtype=np.int64)
        if not len(here):
            continue
        decomposable = np.zeros(0, dtype=np.int64)
        t = P.table(n)
        for i in range(1, n):
            left = np.asarray(members.get(i, ()), dtype=np.int64)
            right = np.asarray(members.get(n - i, ()), dtype=np.int64)
            if not len(left) or not len(right):
                continue
            prods = (left[:, None] * k ** (n - i) + right[None, :]).ravel()
            decomposable = np.union1d(decomposable, t[prods])
        for x in np.setdiff1d(here, decomposable):
            out.append(P.unindex(int(x), n))
    return out


def fix_up_to(P: Presentation, phi: Endo, L: int, indecomposables: bool = True) -> FixReport:
    """Fixed elements of length 1..L and the indecomposable ones."""
    if not P.has_table(L):
        raise ClassCapExceeded(f"length {L} is beyond the tabulation limit")
    fixed = {}
    for n in range(1, L + 1):
        cand = P.canonicals(n)
        length, canon = image_canonicals(P, phi, n, cand)
        fixed[n] = cand[(length == n) & (canon == cand)]
    ind = tuple(graded_indecomposables(P, fixed)) if indecomposables else ()
    return FixReport(L, fixed, ind, P)


# ---------------------------------------------------------------------
# periodic points


@dataclass(frozen=True)
class OrbitData:
    m: int | None
    p: int | None

    @property
    def bounded(self) -> bool:
        return self.p is not None


def eventual_period(P: Presentation, phi: Endo, search_cap: int = 64, class_cap: int = 20_000) -> dict:
    """For each generator a, the least (m, p) with aφ^{m+p} = aφ^m.

    Gives ``OrbitData(None, None)`` when no repeat is found within the
    limits: the orbit reaches a word longer than ``search_cap``, or a
    class too large to search (more than ``class_cap`` words).
    """
    out = {}
    for a in range(P.k):
        seen = {}
        w = P.canonical((a,))
        n = 0
        while True:
            if w in seen:
                out[a] = OrbitData(seen[w], n - seen[w])
                break
            seen[w] = n
            w = phi.apply(w)
            n += 1
            if len(w) > search_cap:
                out[a] = OrbitData(None, None)
                break
            try:
                w = P.canonical(w, cap=class_cap)
            except ClassCapExceeded:
                out[a] = OrbitData(None, None)
                break
    return out


@dataclass(frozen=True)
class PerReport:
    L: int
    k: int | None
    periodic: dict            # length -> sorted canonical indices
    period_of: dict           # length -> periods aligned with ``periodic``
    indecomposables: tuple
    R: int
    fix_factorial: tuple      # |Fix(φ^{n!})| up to L for n = 1..n_max
    P: Presentation = field(repr=False, default=None)

    @property
    def stabilized(self) -> bool:
        return self.k is not None

    def count(self) -> int:
        return sum(len(v) for v in self.periodic.values())

    def periodic_words(self) -> list:
        return [self.P.unindex(int(x), n) for n in sorted(self.periodic) for x in self.periodic[n]]

    def period(self, w) -> int | None:
        n = len(w)
        xs = self.periodic.get(n)
        if xs is None:
            return None
        i = self.P.index(self.P.canonical(w))
        j = np.searchsorted(xs, i)
        return int(self.period_of[n][j]) if j < len(xs) and xs[j] == i else None

    def fixed_by_power(self, m: int) -> dict:
        """Fix(φ^m) up to L, read off from the periods."""
        return {n: xs[m % self.period_of[n] == 0] for n, xs in self.periodic.items()}


def per_up_to(P: Presentation, phi: Endo, L: int, n_max: int = 6) -> PerReport:
    """Periodic elements of length ≤ L with their periods.

    Each class of length ≤ L points to the class of its image.  An image
    longer than L is followed until it comes back to length ≤ L, repeats,
    or holds more than L letters that φ never erases; that count never
    decreases along an orbit, so in the last two cases it never returns.
    """
    k = P.k
    offs = np.cumsum([0] + [k ** n for n in range(L + 1)])
    sink = int(offs[-1])
    nxt = np.full(sink + 1, sink, dtype=np.int64)
    wt = np.ones(sink + 1, dtype=np.int64)
    durable = _durable_letters(phi)
    for n in range(L + 1):
        cand = P.canonicals(n)
        length, canon = image_canonicals(P, phi, n, cand, L)
        ok = length <= L
        nxt[offs[n] + cand[ok]] = offs[length[ok]] + canon[ok]
        if len(durable) < k:
            out = cand[~ok]
            # letters φ never erases, counted in the first image
            kept = np.array([sum(b in durable for b in w) for w in phi.images], dtype=np.int64)
            count = np.zeros(len(out), dtype=np.int64)
            for j in range(n):
                count += kept[(out // k ** (n - 1 - j)) % k]
            for i in out[count <= L].tolist():
                target, steps = _follow(P, phi, P.unindex(i, n), L, durable)
                if target is not None:
                    nxt[offs[n] + i] = offs[len(target)] + P.table(len(target))[P.index(target)]
                    wt[offs[n] + i] = steps
    # after at least sink+1 steps every node sits on a cycle
    f = nxt.copy()
    reach = 1
    while reach <= sink:
        f = f[f]
        reach *= 2
    nodes = np.unique(f)
    nodes = nodes[(nodes != sink) & (nodes >= offs[1])]
    period = np.zeros(len(nodes), dtype=np.int64)
    cur, acc = nxt[nodes], wt[nodes].copy()
    while (period == 0).any():
        back = (cur == nodes) & (period == 0)
        period[back] = acc[back]
        acc += wt[cur]
        cur = nxt[cur]
    lengths = np.searchsorted(offs, nodes, side="right") - 1
    periodic, period_of = {}, {}
    for n in range(1, L + 1):
        sel = lengths == n
        periodic[n] = nodes[sel] - offs[n]
        period_of[n] = period[sel]
    ind = tuple(graded_indecomposables(P, periodic))
    R = 1
    for w in ind:
        n = len(w)
        R = lcm(R, int(period_of[n][np.searchsorted(periodic[n], P.index(w))]))
    distinct = set(np.unique(period).tolist())
    kk = None
    for j in range(1, n_max + 1):
        if all(factorial(j) % d == 0 for d in distinct):
            kk = j
            break
    fix_fact = tuple(int((factorial(j) % period == 0).sum()) for j in range(1, n_max + 1))
    return PerReport(L, kk, periodic, period_of, ind, R, fix_fact, P)


def _durable_letters(phi: Endo) -> frozenset:
    """Letters no power of φ sends to the empty word."""
    dead = set()
    while True:
        more = {a for a in range(phi.P.k) if all(b in dead for b in phi.images[a])}
        if more == dead:
            return frozenset(range(phi.P.k)) - dead
        dead = more


def _follow(P: Presentation, phi: Endo, w, L: int, durable):
    """First (wφ^j, j) with |wφ^j| ≤ L, or (None, 0) if the orbit never gets there."""
    images = phi.images
    steps = 0
    seen = set()
    while True:
        out = []
        for a in w:
            out.extend(images[a])
        w = tuple(out)
        steps += 1
        if len(w) <= L:
            return w, steps
        if sum(a in durable for a in w) > L or w in seen:
            return None, 0
        seen.add(w)


def period_divides_R(P: Presentation, phi: Endo, report: PerReport):
    """(True, None) if xφ^R = x for every listed periodic x, else (False, witness).

    φ^R is expanded on the generators and applied to each periodic word.
    """
    power = phi.power(report.R, cap=report.L)
    for n, xs in report.periodic.items():
        if not len(xs):
            continue
        length, canon = image_canonicals(P, power, n, xs)
        bad = (length != n) | (canon != xs)
        if bad.any():
            return False, P.unindex(int(xs[bad][0]), n)
    return True, None


def reduction_check(P: Presentation, phi: Endo, L: int, search_cap: int = 64, class_cap: int = 20_000):
    """Fix(φ) = (Fix(φ^{p-1}))φ^p within length L, for p a common multiple of
    the generator periods with p - 1 ≥ every preperiod.  None when some
    generator orbit shows no repeat within the search limits."""
    orbits = eventual_period(P, phi, search_cap, class_cap)
    if not all(o.bounded for o in orbits.values()):
        return None
    base = lcm(*(o.p for o in orbits.values()))
    m = max(o.m for o in orbits.values())
    p = base
    while p - 1 < m:
        p += base
    lhs = fix_up_to(P, phi, L, indecomposables=False)
    before = fix_up_to(P, phi.power(p - 1, cap=L), L, indecomposables=False)
    rhs = set()
    phip = phi.power(p, cap=L)
    for w in before.fixed_words():
        u = phip.apply(w)
        if 1 <= len(u) <= L:
            rhs.add(P.canonical(u))
    return set(map(tuple, lhs.fixed_words())) == rhs, p


# ---------------------------------------------------------------------
# enumeration helpers


def words_up_to(k: int, max_len: int, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        yield from product(range(k), repeat=n)


def all_endos(P: Presentation, max_image: int):
    """Every validated endomorphism with generator images of length ≤ max_image."""
    min_len = 1 if P.flavor == "semigroup" else 0
    pool = list(words_up_to(P.k, max_image, min_len))
    for imgs in product(pool, repeat=P.k):
        if is_endo(P, imgs):
            yield Endo(P, imgs)


def one_relator_family(k: int) -> list[Presentation]:
    """⟨A | a1a2 = a3a4⟩ over |A| = k, one per class under letter
    permutations, swapping sides and reversing both sides; the trivial
    relation stands for the free monoid."""
    from itertools import permutations

    alphabet = Alphabet(tuple("abcdefgh"[:k]))
    reps = set()
    out = []
    for a1, a2, a3, a4 in product(range(k), repeat=4):
        u, v = (a1, a2), (a3, a4)
        if u == v:
            key = ("free",)
        else:
            variants = []
            for s in permutations(range(k)):
                for x, y in ((u, v), (v, u)):
                    for rev in (False, True):
                        xx = tuple(s[c] for c in x)
                        yy = tuple(s[c] for c in y)
                        if rev:
                            xx, yy = xx[::-1], yy[::-1]
                        variants.append(min((xx, yy), (yy, xx)))
            key = min(variants)
        if key in reps:
            continue
        reps.add(key)
        rels = [] if key == ("free",) else [key]
        out.append(Presentation(alphabet, rels, "monoid"))
    return out
