from functools import lru_cache
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import class_bfs, fixed_by_power, periodic_union, word_classes
from takahasi import presentations as pr
from takahasi.presentations import ClassCapExceeded, EndoError, PresentationError
from takahasi.words import Alphabet

AB = "monoid a b"
EXTH = "monoid a b c ; cac = cbc"


def P_(text):
    return pr.presentation(text)


def fmt_set(P, words):
    return {P.fmt(w) for w in words}


@st.composite
def balanced(draw, max_letters=3, max_rel_len=3, max_rels=2):
    k = draw(st.integers(2, max_letters))
    rels = []
    for _ in range(draw(st.integers(1, max_rels))):
        n = draw(st.integers(1, max_rel_len))
        word = st.lists(st.integers(0, k - 1), min_size=n, max_size=n).map(tuple)
        rels.append((draw(word), draw(word)))
    return pr.Presentation(Alphabet(tuple("abc"[:k])), rels)


@lru_cache(maxsize=None)
def endos_of(k, relations, max_image):
    P = pr.Presentation(Alphabet(tuple("abc"[:k])), relations)
    return P, list(pr.all_endos(P, max_image))


@st.composite
def with_endo(draw, max_image=2):
    P = draw(balanced(max_rel_len=2))
    P, endos = endos_of(P.k, P.relations, max_image)
    return P, draw(st.sampled_from(endos))


def test_parse_and_format():
    P = P_(EXTH)
    assert P.k == 3 and P.relations == ((P.word("cac"), P.word("cbc")),)
    assert str(P) == "monoid a b c ; cac = cbc"
    assert pr.Presentation.from_dict(P.to_dict()).relations == P.relations
    with pytest.raises(PresentationError):
        P_("monoid a b ; ab = a")
    with pytest.raises(PresentationError):
        P_("group a b ; ab = ba")
    with pytest.raises(PresentationError):
        pr.Presentation(Alphabet(("a",)), [((), ())], "semigroup")


def test_congruence_class_examples():
    P = P_(AB + " ; ab = ba")
    assert fmt_set(P, P.congruence_class(P.word("ab"))) == {"ab", "ba"}
    Q = P_(EXTH)
    assert fmt_set(Q, Q.congruence_class(Q.word("cacac"))) == {"cacac", "cbcac", "cacbc", "cbcbc"}
    assert Q.congruence_class(Q.word("a")) == {Q.word("a")}
    with pytest.raises(ClassCapExceeded):
        P.congruence_class(P.word("aaabbb"), cap=5)


def test_canonical_examples():
    P = P_(AB + " ; ab = ba")
    assert P.fmt(P.canonical(P.word("ba"))) == "ab"
    Q = P_(EXTH)
    assert Q.fmt(Q.canonical(Q.word("cbc"))) == "cac"
    assert Q.equal(Q.word("cacac"), Q.word("cbcbc"))
    assert not Q.equal(Q.word("cac"), Q.word("cab"))
    assert not Q.equal(Q.word("ca"), Q.word("cac"))


def test_word_problem_matches_union_find_at_length_ten():
    Q = P_(EXTH)
    canon = word_classes(3, Q.relations, 10)
    for w, c in canon.items():
        assert Q.canonical(w) == c


@settings(max_examples=30, deadline=None)
@given(balanced())
def test_word_problem_matches_oracle(P):
    canon = word_classes(P.k, P.relations, 6)
    for w, c in canon.items():
        assert P.canonical(w) == c
    for w in list(canon)[::37]:
        assert P.congruence_class(w) == class_bfs(w, P.relations)


def test_j_above_examples():
    F = P_(AB)
    assert fmt_set(F, F.j_above(F.word("ab"))) == {"1", "a", "b", "ab"}
    S = pr.Presentation(Alphabet(("a", "b")), [], "semigroup")
    assert fmt_set(S, S.j_above(S.word("ab"))) == {"a", "b", "ab"}
    Q = P_(EXTH)
    above = fmt_set(Q, Q.j_above(Q.word("cac")))
    assert {"a", "b", "c", "ca", "cb", "ac", "bc", "cac"} <= above
    w = Q.word("cacac")
    n = len(w)
    assert len(Q.j_above(w)) <= (n + 1) * n // 2 * len(Q.congruence_class(w)) + 1


def test_validate_endo_examples():
    Q = P_(EXTH)
    phi = pr.validate_endo(Q, "a -> b ; b -> a ; c -> c")
    assert phi.images == ((1,), (0,), (2,))
    P = P_(AB + " ; ab = ba")
    pr.validate_endo(P, "a -> b ; b -> a")
    pr.validate_endo(P, "a -> ab ; b -> b")
    with pytest.raises(EndoError) as err:
        pr.validate_endo(Q, "a -> a ; b -> c ; c -> c")
    assert err.value.relation == 0
    with pytest.raises(PresentationError):
        pr.validate_endo(Q, "a -> b ; b -> a")
    S = pr.Presentation(Alphabet(("a",)), [], "semigroup")
    with pytest.raises(PresentationError):
        pr.validate_endo(S, "a -> 1")


def test_fix_examples():
    P = P_(AB + " ; ab = ba")
    rep = pr.fix_up_to(P, pr.validate_endo(P, "a -> b ; b -> a"), 6)
    assert fmt_set(P, rep.fixed_words()) == {"ab", "aabb", "aaabbb"}
    assert fmt_set(P, rep.indecomposables) == {"ab"} and rep.rank_at_L == 1
    Q = P_(AB + " ; aa = bb")
    rep = pr.fix_up_to(Q, pr.validate_endo(Q, "a -> b ; b -> a"), 6)
    assert fmt_set(Q, rep.indecomposables) == {"aa"}
    E = P_(EXTH)
    ident = pr.fix_up_to(E, pr.validate_endo(E, "a -> a ; b -> b ; c -> c"), 5)
    assert fmt_set(E, ident.indecomposables) == {"a", "b", "c"} and ident.rank_at_L == 3


def test_eventual_period_examples():
    P = P_(AB + " ; ab = ba")
    swap = pr.eventual_period(P, pr.validate_endo(P, "a -> b ; b -> a"))
    assert (swap[0].m, swap[0].p) == (0, 2)
    ident = pr.eventual_period(P, pr.validate_endo(P, "a -> a ; b -> b"))
    assert (ident[1].m, ident[1].p) == (0, 1)
    F = P_(AB)
    grow = pr.eventual_period(F, pr.validate_endo(F, "a -> ab ; b -> b"), search_cap=20)
    assert not grow[0].bounded and grow[1].bounded


def test_per_examples():
    P = P_(AB + " ; ab = ba")
    swap = pr.validate_endo(P, "a -> b ; b -> a")
    rep = pr.per_up_to(P, swap, 4)
    assert (rep.k, rep.R) == (2, 2)
    assert fmt_set(P, [w for n, xs in rep.fixed_by_power(1).items() for w in (P.unindex(int(x), n) for x in xs)]) \
        == {"ab", "aabb"}
    assert rep.count() == sum(P.elements_count(n) for n in range(1, 5))
    assert pr.period_divides_R(P, swap, rep) == (True, None)
    ident = pr.validate_endo(P, "a -> a ; b -> b")
    rep = pr.per_up_to(P, ident, 4)
    assert (rep.k, rep.R) == (1, 1)
    assert pr.period_divides_R(P, ident, rep)[0]


def test_exth_swap_periodic_points():
    E = P_(EXTH)
    phi = pr.validate_endo(E, "a -> b ; b -> a ; c -> c")
    assert phi.power(2).images == ((0,), (1,), (2,))
    rep = pr.per_up_to(E, phi, 10)
    fix = pr.fix_up_to(E, phi, 10, indecomposables=False)
    # an involution: every element is periodic, but a and b swap
    assert rep.count() == sum(E.elements_count(n) for n in range(1, 11))
    assert (rep.k, rep.R) == (2, 2)
    assert set(fix.fixed_words()) < set(rep.periodic_words())
    assert rep.period(E.word("a")) == 2 and rep.period(E.word("cac")) == 1
    ind = fmt_set(E, pr.fix_up_to(E, phi, 7).indecomposables)
    assert {"cac", "cacac", "cacacac"} <= ind


def test_reduction_check_examples():
    P = P_(AB + " ; ab = ba")
    ok, p = pr.reduction_check(P, pr.validate_endo(P, "a -> b ; b -> a"), 6)
    assert ok and p == 2
    F = P_(AB)
    assert pr.reduction_check(F, pr.validate_endo(F, "a -> ab ; b -> b"), 5, search_cap=12) is None


@settings(max_examples=40, deadline=None)
@given(with_endo(max_image=1))
def test_letter_images_keep_length(Pphi):
    P, phi = Pphi
    if not phi.length_preserving():
        phi = pr.validate_endo(P, [(a,) for a in range(P.k)])
    for w in product(range(P.k), repeat=4):
        assert len(phi.apply(w)) == 4


@settings(max_examples=40, deadline=None)
@given(with_endo())
def test_fix_is_generated_by_indecomposables(Pphi):
    P, phi = Pphi
    L = 6
    rep = pr.fix_up_to(P, phi, L)
    canon = word_classes(P.k, P.relations, L)
    images = phi.images
    fixed = fixed_by_power(P.k, P.relations, images, L, 1, canon)
    assert set(rep.fixed_words()) == fixed
    # a submonoid: products of fixed elements stay fixed
    for u in fixed:
        for v in fixed:
            if len(u) + len(v) <= L:
                assert canon[u + v] in fixed
    # regenerate from the indecomposables
    ind = set(rep.indecomposables)
    built = set(ind)
    frontier = set(ind)
    while frontier:
        frontier = {canon[u + v] for u in frontier for v in ind if len(u) + len(v) <= L} - built
        built |= frontier
    assert built == fixed
    for x in ind:
        for y in class_bfs(x, P.relations):
            for i in range(1, len(y)):
                assert not (canon[y[:i]] in fixed and canon[y[i:]] in fixed)


@settings(max_examples=40, deadline=None)
@given(with_endo())
def test_periodic_points_against_oracle(Pphi):
    P, phi = Pphi
    L, n_max = 5, 8
    rep = pr.per_up_to(P, phi, L)
    canon = word_classes(P.k, P.relations, L)
    least = periodic_union(P.k, P.relations, phi.images, L, n_max, canon)
    listed = {P.canonical(w): rep.period(w) for w in rep.periodic_words()}
    assert {x: p for x, p in listed.items() if p <= n_max} == least
    for m in range(1, 7):
        small = rep.fixed_by_power(m)
        for c in (2, 3):
            big = rep.fixed_by_power(m * c)
            for n in small:
                assert set(small[n]) <= set(big[n])
        got = {P.unindex(int(x), n) for n, xs in small.items() for x in xs}
        assert got == fixed_by_power(P.k, P.relations, phi.images, L, m, canon)
    if rep.stabilized:
        assert pr.period_divides_R(P, phi, rep) == (True, None)


@settings(max_examples=25, deadline=None)
@given(with_endo())
def test_reduction_identity(Pphi):
    P, phi = Pphi
    out = pr.reduction_check(P, phi, 5, search_cap=24)
    if out is not None:
        assert out[0]
