import math

import pytest
from hypothesis import given, settings, strategies as st

from oracles import generated, left_cosets
from takahasi import groups
from takahasi.groups import FiniteGroup, GroupError, SubgroupHandle


def test_closure_examples():
    C6 = groups.cyclic(6)
    assert groups.closure(C6, [2]).elements == {0, 2, 4}
    assert groups.closure(C6, [1]).elements == set(range(6))
    S3 = groups.symmetric(3)
    t = [g for g in S3.elements() if S3.element_order(g) == 2]
    assert groups.closure(S3, t[:2]).elements == set(range(6))


def test_index_examples():
    C6 = groups.cyclic(6)
    assert groups.index(C6, SubgroupHandle(C6, frozenset({0, 2, 4}))) == 2
    assert groups.index(C6, groups.whole(C6)) == 1
    S3 = groups.symmetric(3)
    r = next(g for g in S3.elements() if S3.element_order(g) == 3)
    assert groups.index(S3, groups.closure(S3, [r])) == 2


def test_index_needs_a_subgroup():
    C6 = groups.cyclic(6)
    with pytest.raises(GroupError):
        groups.index(C6, SubgroupHandle(C6, frozenset({0, 1})))


def test_min_rank_examples():
    assert groups.min_rank(groups.trivial()) == 0
    assert groups.min_rank(groups.cyclic(6)) == 1
    assert groups.min_rank(groups.by_name("C2xC2")) == 2


def test_table_is_validated():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [0, 1]])


def test_named_groups():
    assert [groups.by_name(n).order for n in ("C6", "S3", "D4", "Q8", "C2xC2")] == [6, 6, 8, 8, 4]
    assert not groups.by_name("S3").is_abelian()
    Q8 = groups.by_name("Q8")
    assert sum(1 for g in Q8.elements() if Q8.element_order(g) == 2) == 1
    with pytest.raises(GroupError):
        groups.by_name("X9")


def test_json_roundtrip():
    G = groups.by_name("D4")
    assert FiniteGroup.from_dict(G.to_dict()) == G


def test_subgroup_counts():
    # S3 has 6 subgroups, C2xC2 has 5, Q8 has 6
    assert len(groups.subgroups(groups.symmetric(3))) == 6
    assert len(groups.subgroups(groups.by_name("C2xC2"))) == 5
    assert len(groups.subgroups(groups.quaternion())) == 6


def test_homomorphisms_count():
    # Hom(C4, C2) has 2 elements and Hom(C2xC2, C2) has 4
    assert len(groups.homomorphisms(groups.cyclic(4), groups.cyclic(2))) == 2
    assert len(groups.homomorphisms(groups.by_name("C2xC2"), groups.cyclic(2))) == 4


def test_normality():
    S3 = groups.symmetric(3)
    t = next(g for g in S3.elements() if S3.element_order(g) == 2)
    r = next(g for g in S3.elements() if S3.element_order(g) == 3)
    assert not groups.closure(S3, [t]).is_normal()
    assert groups.closure(S3, [r]).is_normal()


library = st.sampled_from(groups.library(12))


@settings(max_examples=60, deadline=None)
@given(library, st.lists(st.integers(0, 11), max_size=3))
def test_closure_monotone_and_idempotent(G, xs):
    xs = [x % G.order for x in xs]
    H = groups.closure(G, xs)
    assert groups.closure(G, H.elements).elements == H.elements
    assert set(xs) <= H.elements
    if xs:
        # in a finite group the products of the generators already contain inverses
        assert H.elements == generated(G.table.tolist(), xs)
    else:
        assert H.elements == {G.identity}
    bigger = groups.closure(G, xs + [1 % G.order])
    assert H.elements <= bigger.elements


@settings(max_examples=60, deadline=None)
@given(library, st.lists(st.integers(0, 11), max_size=3))
def test_lagrange(G, xs):
    H = groups.closure(G, [x % G.order for x in xs])
    idx = groups.index(G, H)
    assert idx * H.order == G.order
    assert idx == len(left_cosets(G.table.tolist(), H.elements, G.elements()))


@settings(max_examples=30, deadline=None)
@given(library)
def test_min_rank_log_bound(G):
    r = groups.min_rank(G)
    assert r <= math.log2(G.order) if G.order > 1 else r == 0
    # and some r-subset really generates
    assert groups.min_rank(groups.whole(G)) == r
