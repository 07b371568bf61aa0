"""Seeded sweeps that cross-check each module against a direct computation.

Every experiment returns an :class:`ExperimentReport`; ``passed`` is True
only when no counterexample was found.  Reports are deterministic for a
given seed.
"""

from __future__ import annotations

import functools
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

import numpy as np

from . import clifford, groups, numeric, presentations, reference, rees, rewriting, stallings
from .words import invert, reduced_words


@dataclass
class ExperimentReport:
    name: str
    passed: bool
    seed: int | None
    stats: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "seed": self.seed,
            "elapsed_s": round(self.elapsed, 3),
            "stats": self.stats,
            "counterexamples": [repr(c) for c in self.counterexamples[:20]],
        }


REGISTRY: dict[str, Callable[..., ExperimentReport]] = {}


def experiment(name):
    def deco(fn):
        @functools.wraps(fn)
        def run(**kw):
            t = time.perf_counter()
            rep = fn(**kw)
            rep.elapsed = time.perf_counter() - t
            return rep

        REGISTRY[name] = run
        return run

    return deco


def run(name: str, **params) -> ExperimentReport:
    if name not in REGISTRY:
        raise KeyError(f"unknown experiment {name!r}; choose from {sorted(REGISTRY)}")
    return REGISTRY[name](**params)


# ---------------------------------------------------------------------
# free groups


def _signed_perms():
    """The 8 automorphisms of F(a, b) permuting and inverting letters."""
    maps = []
    for swap, fa, fb in product((0, 1), repeat=3):
        m = {}
        for sym, flip in ((0, fa), (1, fb)):
            tgt = (1 - sym) if swap else sym
            m[2 * sym] = 2 * tgt + flip
            m[2 * sym + 1] = 2 * tgt + (1 - flip)
        maps.append(m)
    return maps


def _set_key(ws, perms):
    out = []
    for m in perms:
        imgs = [tuple(m[x] for x in w) for w in ws]
        out.append(tuple(sorted(min(w, invert(w)) for w in imgs)))
    return min(out)


def rank_instances(seed: int = 0, sample: int = 5000, max_len: int = 5):
    """Generator sets for the rank-formula sweep.

    All sets of one or two reduced words of length ≤ max_len and all sets of
    three words of length ≤ 3, each up to word inversion and the letter
    automorphisms, then a seeded sample of three-word sets of length ≤ max_len.
    """
    perms = _signed_perms()
    reps = sorted({min(w, invert(w)) for w in reduced_words(2, max_len)})
    short = [w for w in reps if len(w) <= 3]
    keys = set()
    out = []
    for ws in [(w,) for w in reps] + list(combinations(reps, 2)) + list(combinations(short, 3)):
        k = _set_key(ws, perms)
        if k not in keys:
            keys.add(k)
            out.append(list(ws))
    rng = random.Random(seed)
    while sample > 0:
        ws = tuple(sorted(rng.sample(reps, 3)))
        k = _set_key(ws, perms)
        if k in keys:
            continue
        keys.add(k)
        out.append(list(ws))
        sample -= 1
    return out


@experiment("rank-formula")
def rank_formula(seed: int = 0, sample: int = 5000, max_len: int = 5) -> ExperimentReport:
    """|E|/2 - |Q| + 1 of the Stallings graph against a Nielsen-reduced basis."""
    inst = rank_instances(seed, sample, max_len)
    bad = []
    hist: dict = {}
    for gens in inst:
        r = stallings.subgroup(gens).rank
        n = reference.nielsen_rank(gens)
        hist[r] = hist.get(r, 0) + 1
        if r != n:
            bad.append((gens, r, n))
    return ExperimentReport("rank-formula", not bad, seed,
                            {"instances": len(inst), "mismatches": len(bad),
                             "rank_histogram": dict(sorted(hist.items()))}, bad)


def random_trim_automaton(rng: random.Random, max_states: int = 6, max_edges: int = 10):
    while True:
        n = rng.randint(1, max_states)
        edges = {(rng.randrange(n), rng.randrange(4), rng.randrange(n)) for _ in range(rng.randint(1, max_edges))}
        terms = {v for v in range(n) if rng.random() < 0.3} or {rng.randrange(n)}
        A = stallings.trim(stallings.Automaton.build(n, edges, 0, terms))
        if not A.is_degenerate and A.edges:
            return A


@experiment("ragr-bound")
def ragr_bound(seed: int = 0, count: int = 500, max_states: int = 6) -> ExperimentReport:
    """Pipeline rank against |E| - |Q| + |{q0} ∪ T| on random trim automata."""
    rng = random.Random(seed)
    bad = []
    slack = []
    for _ in range(count):
        A = random_trim_automaton(rng, max_states)
        res = stallings.pipeline(A, rng)
        bound = stallings.ragr_bound(A)
        slack.append(bound - res.report.rank)
        if res.report.rank > bound:
            bad.append((A.to_dict(), res.report.rank, bound))
    return ExperimentReport("ragr-bound", not bad, seed,
                            {"instances": count, "violations": len(bad), "min_slack": min(slack),
                             "mean_slack": round(sum(slack) / len(slack), 3)}, bad)


def random_dual_automaton(rng: random.Random, max_states: int = 8, max_edges: int = 14):
    n = rng.randint(1, max_states)
    edges = {(rng.randrange(n), rng.randrange(4), rng.randrange(n)) for _ in range(rng.randint(1, max_edges))}
    return stallings.dualize(stallings.Automaton.build(n, edges, 0, {rng.randrange(n)}))


@experiment("fold-order")
def fold_order(seed: int = 0, count: int = 100) -> ExperimentReport:
    """Folding the same dual automaton in two shuffled orders gives isomorphic results."""
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        A = random_dual_automaton(rng)
        f1 = stallings.fold(A, random.Random(rng.random()))
        f2 = stallings.fold(A, random.Random(rng.random()))
        same = stallings.canonical_form(f1) == stallings.canonical_form(f2)
        same &= stallings.canonical_form(stallings.prune(f1)) == stallings.canonical_form(stallings.prune(f2))
        if not same:
            bad.append(A.to_dict())
    return ExperimentReport("fold-order", not bad, seed, {"instances": count, "differences": len(bad)}, bad)


# ---------------------------------------------------------------------
# numeric


@experiment("numeric-profile")
def numeric_profile(lo: int = 2, hi: int = 12, max_size: int = 3) -> ExperimentReport:
    """(d, p) and minimal generators for every generator set ⊆ {lo..hi} of size ≤ max_size."""
    bad = []
    n = 0
    for size in range(1, max_size + 1):
        for gens in combinations(range(lo, hi + 1), size):
            n += 1
            pr = numeric.profile(numeric.NumSgp(gens))
            d, p = reference.segment_profile(gens)
            mins = tuple(reference.minimal_generators(gens))
            if (pr.d, pr.p, pr.minimal_generators) != (d, p, mins):
                bad.append((gens, (pr.d, pr.p, pr.minimal_generators), (d, p, mins)))
    s35 = numeric.profile(numeric.NumSgp.of(3, 5))
    ok35 = (s35.d, s35.p) == (1, 8)
    return ExperimentReport("numeric-profile", not bad and ok35, None,
                            {"sets": n, "mismatches": len(bad), "<3,5>": [s35.d, s35.p]}, bad)


@experiment("notts")
def notts(n_max: int = 25) -> ExperimentReport:
    """S_n = ⟨(-2,0), (2n-1,1)⟩ ascends strictly with (2n+1,1) ∉ S_n."""
    rep = numeric.notts_chain(n_max)
    bad = [n + 1 for n, ok in enumerate(rep.ascending) if not ok]
    bad += [-(n + 1) for n, ok in enumerate(rep.excluded) if not ok]
    return ExperimentReport("notts", rep.all_strict, None,
                            {"n_max": n_max, "ascending": all(rep.ascending), "excluded": all(rep.excluded)},
                            bad)


# ---------------------------------------------------------------------
# Rees matrix semigroups


REES_GROUPS = ("C2", "C3", "C4", "C2xC2", "S3", "C6")


@experiment("rees-bound")
def rees_bound(seed: int = 0, per_shape: int = 20, gens: int = 2, gen_sets: int = 10,
               group_max: int | None = None, max_index: int = 2) -> ExperimentReport:
    """rk_G(T^(iλ)) ≤ rk_CS(T)² + 1 and L(G-automaton) = component image."""
    rng = np.random.default_rng(seed)
    if group_max is None:
        gs = [groups.by_name(n) for n in REES_GROUPS]
    else:
        gs = [g for g in groups.library(group_max) if g.order > 1]
    bad, lang_bad = [], []
    n_inst = n_comp = 0
    worst = 0
    for G in gs:
        for ni, nl in product(range(1, max_index + 1), repeat=2):
            for _ in range(per_shape):
                S = rees.random_structure(rng, G, ni, nl)
                for s in range(gen_sets):
                    k = 1 + s % gens
                    A = [rees.random_element(rng, S) for _ in range(k)]
                    T = S.closure(A)
                    rcs = rees.rk_cs(S, T)
                    n_inst += 1
                    for i in sorted(T.I_A):
                        for lam in sorted(T.Lambda_A):
                            n_comp += 1
                            H = rees.component_iso(S, T, i, lam)
                            rc = groups.min_rank(H)
                            worst = max(worst, rc - rcs * rcs - 1)
                            if rc > rcs * rcs + 1:
                                bad.append((S.to_dict(), A, i, lam, rcs, rc))
                            aut = rees.build_g_automaton(S, A, i, lam)
                            if aut.language() != H.elements or not aut.is_trim():
                                lang_bad.append((S.to_dict(), A, i, lam))
    return ExperimentReport("rees-bound", not bad and not lang_bad, seed,
                            {"closures": n_inst, "components": n_comp, "bound_violations": len(bad),
                             "automaton_mismatches": len(lang_bad), "max_excess": worst},
                            bad + lang_bad)


# ---------------------------------------------------------------------
# Clifford semigroups


def clifford_instances(seed: int = 0, count: int = 50, max_order: int = 8):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        S = clifford.random_instance(rng, max_order)
        A, T = clifford.random_subalgebra(rng, S)
        out.append((S, A, T))
    return out


@experiment("clifford-index")
def clifford_index(seed: int = 0, count: int = 50, max_order: int = 8) -> ExperimentReport:
    """Green index ≤ |S/ℋ^T| when [S:T] is finite; both indices against
    Lagrange's when S is one group (every subgroup of every library group)."""
    bad, single_bad = [], []
    for S, A, T in clifford_instances(seed, count, max_order):
        ix = clifford.index(S, T)
        gr = clifford.green_index(S, T)
        if ix.finite and not gr.green <= gr.h_t_classes:
            bad.append((S.to_dict(), A))
    n_single = 0
    for G in groups.library(max_order):
        S = clifford.single_group(G)
        for H in groups.subgroups(G):
            n_single += 1
            T = [(0, g) for g in H.elements]
            lag = groups.index(G, H)
            ix = clifford.index(S, T).sup
            gr = clifford.green_index(S, T).green
            if ix != lag or gr != lag:
                single_bad.append({"group": G.name, "subgroup": sorted(H.elements), "normal": H.is_normal(),
                                   "lagrange": lag, "index": ix, "green": gr})
    return ExperimentReport("clifford-index", not bad and not single_bad, seed,
                            {"semilattices": count, "green_bound_violations": len(bad),
                             "single_group_cases": n_single, "single_group_mismatches": len(single_bad),
                             "mismatches_all_non_normal": all(not c["normal"] for c in single_bad)},
                            bad + single_bad)


@experiment("fug")
def fug(seed: int = 0, count: int = 50, max_order: int = 8) -> ExperimentReport:
    """rk_G(T ∩ H) ≤ rk_C(T) for every level H meeting T, with the retraction checked."""
    bad = []
    checks = 0
    for S, A, T in clifford_instances(seed, count, max_order):
        levels = sorted({a for a, _ in T})
        rc = None
        for a in levels:
            rep = clifford.retraction_check(S, T, a, upper=len(set(A)))
            checks += 1
            rc = rep.rk_c
            if not rep.holds:
                bad.append((S.to_dict(), A, a, rep.rk_g, rep.rk_c))
    return ExperimentReport("fug", not bad, seed, {"checks": checks, "violations": len(bad)}, bad)


# ---------------------------------------------------------------------
# presentations


def ltwo_cases(letters=(2, 3), image_len: int = 2):
    for k in letters:
        for P in presentations.one_relator_family(k):
            for phi in presentations.all_endos(P, image_len):
                yield P, phi


@experiment("ltwo-sweep")
def ltwo_sweep(letters=(2, 3), image_len: int = 2, L: int = 8) -> ExperimentReport:
    """rank of Fix(φ) within length L is at most |A| for every one-relator case."""
    if isinstance(letters, int):
        letters = (letters,) if letters <= 2 else tuple(range(2, letters + 1))
    bad = []
    n = 0
    worst: dict = {}
    for P, phi in ltwo_cases(letters, image_len):
        n += 1
        r = presentations.fix_up_to(P, phi, L).rank_at_L
        worst[P.k] = max(worst.get(P.k, 0), r)
        if r > P.k:
            bad.append((str(P), str(phi), r))
    return ExperimentReport("ltwo-sweep", not bad, None,
                            {"endomorphisms": n, "violations": len(bad),
                             "max_rank_by_alphabet": {str(k): v for k, v in sorted(worst.items())}}, bad)


@experiment("ltwo-closed-forms")
def ltwo_closed_forms(L: int = 8) -> ExperimentReport:
    """Fix of the swap on ⟨a,b | ab=ba⟩ is {ab}* and on ⟨a,b | a²=b²⟩ is {a²}*."""
    out = {}
    ok = True
    for text, gen in (("monoid a b ; ab = ba", "ab"), ("monoid a b ; aa = bb", "aa")):
        P = presentations.presentation(text)
        phi = presentations.validate_endo(P, "a -> b ; b -> a")
        rep = presentations.fix_up_to(P, phi, L)
        ind = sorted(P.fmt(w) for w in rep.indecomposables)
        g = P.word(gen)
        closed = {P.canonical(g * j) for j in range(1, L // len(g) + 1)}
        fixed = set(rep.fixed_words())
        ok &= ind == [gen] and fixed == closed
        out[text] = {"indecomposables": ind, "fixed": sorted(P.fmt(w) for w in fixed)}
    return ExperimentReport("ltwo-closed-forms", ok, None, out)


@experiment("rewriting")
def rewriting_check(max_len: int = 8) -> ExperimentReport:
    """{bb → aa, baa → aab}: critical pairs, normal forms and agreement with a² = b²."""
    R = rewriting.a2b2_system()
    conf = R.check_local_confluence()
    fmt = lambda w: "".join("ab"[x] for x in w)  # noqa: E731
    pairs = {fmt(p.word): (fmt(p.left_nf), fmt(p.right_nf)) for p in conf.pairs}
    expected = {"bbb": ("aab", "aab"), "bbaa": ("aaaa", "aaaa")}
    P = presentations.presentation("monoid a b ; aa = bb")
    pattern_bad, class_bad = [], []
    for n in range(max_len + 1):
        nfs = {}
        for w in product((0, 1), repeat=n):
            nf = R.normal_form(w)
            if not rewriting.matches_block_pattern(fmt(nf)):
                pattern_bad.append(fmt(w))
            if not P.equal(nf, w):
                class_bad.append(fmt(w))
            nfs.setdefault(nf, set()).add(P.canonical(w))
        if any(len(v) != 1 for v in nfs.values()) or len(nfs) != P.elements_count(n):
            class_bad.append(f"length {n}")
    ok = conf.locally_confluent and pairs == expected and not pattern_bad and not class_bad
    return ExperimentReport("rewriting", ok, None,
                            {"critical_pairs": pairs, "pattern_failures": len(pattern_bad),
                             "class_failures": len(class_bad)}, pattern_bad + class_bad)


def exth_check(n_max: int = 6) -> dict:
    """(ca)^n c for n ≤ n_max: fixed, pairwise distinct and indecomposable in Fix(φ)."""
    P = presentations.presentation("monoid a b c ; cac = cbc")
    phi = presentations.validate_endo(P, "a -> b ; b -> a ; c -> c")
    words = [P.word("ca" * n + "c") for n in range(1, n_max + 1)]
    fixed = [P.equal(phi.apply(w), w) for w in words]
    distinct = len({P.canonical(w) for w in words}) == len(words)

    def is_fixed(x):
        return P.equal(phi.apply(x), x)

    indecomposable = []
    for w in words:
        split = any(is_fixed(x[:i]) and is_fixed(x[i:])
                    for x in P.congruence_class(w) for i in range(1, len(x)))
        indecomposable.append(not split)
    counts = []
    for n in range(1, n_max + 1):
        rep = presentations.fix_up_to(P, phi, 2 * n + 1)
        counts.append(rep.rank_at_L)
    return {"fixed": fixed, "distinct": distinct, "indecomposable": indecomposable,
            "indecomposable_counts": counts,
            "indecomposables": [P.fmt(w) for w in rep.indecomposables]}


@experiment("exth")
def exth(n_max: int = 6) -> ExperimentReport:
    r = exth_check(n_max)
    c = r["indecomposable_counts"]
    ok = (all(r["fixed"]) and r["distinct"] and all(r["indecomposable"])
          and c[-1] >= n_max and all(x < y for x, y in zip(c, c[1:])))
    return ExperimentReport("exth", ok, None, r)


@experiment("per-period")
def per_period(letters=(2, 3), image_len: int = 2, L: int = 8, n_max: int = 6) -> ExperimentReport:
    """Fix(φ^m) ⊆ Fix(φ^n) for m | n ≤ n_max, Per(φ) against the union of
    Fix(φ^n) for n ≤ n_max, and xφ^R = x on every periodic x."""
    if isinstance(letters, int):
        letters = (letters,) if letters <= 2 else tuple(range(2, letters + 1))
    mono_bad, per_bad, r_bad = [], [], []
    n = 0
    canon_cache = {}
    for P, phi in ltwo_cases(letters, image_len):
        n += 1
        fixes = {m: presentations.fix_up_to(P, phi.power(m, cap=L), L, indecomposables=False) for m in range(1, n_max + 1)}
        for m in range(1, n_max + 1):
            for q in range(m, n_max + 1, m):
                if not all(np.isin(xs, fixes[q].fixed.get(length, ())).all()
                           for length, xs in fixes[m].fixed.items()):
                    mono_bad.append((str(P), str(phi), m, q))
        rep = presentations.per_up_to(P, phi, L, n_max)
        key = (P.k, P.relations)
        if key not in canon_cache:
            canon_cache[key] = reference.word_classes(P.k, P.relations, L)
        brute = reference.periodic_union(P.k, P.relations, phi.images, L, n_max, canon_cache[key])
        if not rep.stabilized or set(rep.periodic_words()) != set(brute):
            per_bad.append((str(P), str(phi)))
        ok, witness = presentations.period_divides_R(P, phi, rep)
        if not ok:
            r_bad.append((str(P), str(phi), witness))
    return ExperimentReport("per-period", not (mono_bad or per_bad or r_bad), None,
                            {"endomorphisms": n, "monotonicity_failures": len(mono_bad),
                             "per_mismatches": len(per_bad), "period_failures": len(r_bad)},
                            mono_bad + per_bad + r_bad)


ACCEPTANCE = (
    "rank-formula", "ragr-bound", "fold-order", "numeric-profile", "notts", "rees-bound",
    "clifford-index", "fug", "ltwo-sweep", "ltwo-closed-forms", "rewriting", "exth", "per-period",
)
