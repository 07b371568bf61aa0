from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import word_classes
from takahasi import presentations as pr
from takahasi.rewriting import OrderViolation, RewriteSystem, a2b2_system, matches_block_pattern
from takahasi.words import Alphabet

AB = Alphabet(("a", "b"))


def fmt(w):
    return "".join(AB.symbols[x] for x in w)


def nf(R, text):
    return fmt(R.normal_form(AB.parse(text)))


def test_normal_form_examples():
    R = a2b2_system()
    assert nf(R, "bbb") == "aab"
    assert nf(R, "bbaa") == "aaaa"
    assert nf(R, "ab") == "ab"
    assert R.is_irreducible(AB.parse("abab"))


def test_critical_pairs_join():
    R = a2b2_system()
    report = R.check_local_confluence()
    assert report.locally_confluent and not report.failures
    words = {fmt(p.word) for p in report.pairs}
    assert {"bbb", "bbaa"} <= words
    for p in report.pairs:
        if fmt(p.word) == "bbb":
            assert fmt(p.left_nf) == fmt(p.right_nf) == "aab"
        if fmt(p.word) == "bbaa":
            assert fmt(p.left_nf) == fmt(p.right_nf) == "aaaa"


def test_normal_forms_follow_block_pattern():
    R = a2b2_system()
    for n in range(9):
        for w in product(range(2), repeat=n):
            assert matches_block_pattern(fmt(R.normal_form(w)))


def test_normal_forms_decide_the_word_problem():
    # two words are equal in ⟨a, b | a² = b²⟩ iff they share a normal form
    R = a2b2_system()
    canon = word_classes(2, [((0, 0), (1, 1))], 8)
    by_class = {}
    for w, c in canon.items():
        by_class.setdefault(c, set()).add(R.normal_form(w))
    assert all(len(v) == 1 for v in by_class.values())
    assert len({next(iter(v)) for v in by_class.values()}) == len(by_class)


def test_order_violations():
    with pytest.raises(OrderViolation):
        RewriteSystem.parse(AB, "aa -> bb")
    with pytest.raises(OrderViolation):
        RewriteSystem.parse(AB, "ab -> a")
    with pytest.raises(OrderViolation):
        RewriteSystem(AB, [((), ())])


def test_non_confluent_pair_is_reported():
    # bbb rewrites to abb → aab and to bab, which is irreducible
    R = RewriteSystem.parse(AB, "bb -> ab")
    report = R.check_local_confluence()
    assert not report.locally_confluent
    assert {(fmt(p.left_nf), fmt(p.right_nf)) for p in report.failures} == {("aab", "bab")}


@given(st.lists(st.integers(0, 1), max_size=12))
def test_normal_form_is_irreducible_and_equal(w):
    R = a2b2_system()
    P = pr.presentation("monoid a b ; aa = bb")
    v = R.normal_form(w)
    assert R.is_irreducible(v)
    assert len(v) == len(w)
    assert P.equal(v, tuple(w))
