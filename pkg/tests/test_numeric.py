from itertools import combinations
from math import gcd
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from oracles import minimal_generators, pairwise_gcd_min, segment_profile, sums_up_to
from takahasi import numeric
from takahasi.numeric import IntSgpTag, NumSgp


def test_member_examples():
    S = NumSgp.of(3, 5)
    assert not numeric.member(S, 7)
    assert numeric.member(S, 8)
    assert numeric.member(NumSgp.of(2), 2)


def test_zero_is_never_a_member():
    assert not numeric.member(NumSgp.of(1), 0)


def test_profile_examples():
    assert numeric.profile(NumSgp.of(3, 5)) == numeric.NumSgpProfile(1, 8, (3, 5))
    # 0 is not a sum, so p = 1 rather than 0
    assert numeric.profile(NumSgp.of(2)) == numeric.NumSgpProfile(2, 1, (2,))
    assert numeric.profile(NumSgp.of(4, 6)) == numeric.NumSgpProfile(2, 3, (4, 6))


def test_profile_against_segment_oracle_for_three_five():
    assert segment_profile([3, 5]) == (1, 8)


def test_invalid_generators():
    with pytest.raises(ValueError):
        NumSgp.of()
    with pytest.raises(ValueError):
        NumSgp.of(0, 3)


def test_classify_examples():
    assert numeric.classify_int([3, 5]).tag is IntSgpTag.NONNEG
    assert numeric.classify_int([-2, -7]).tag is IntSgpTag.NONPOS
    c = numeric.classify_int([2, -3])
    assert c.tag is IntSgpTag.FULL_GROUP and c.d == 1


def test_mixed_signs_reach_every_integer_in_a_window():
    # bounded closure under addition inside [-20, 20]
    reach = {2, -3}
    while True:
        more = {x + y for x in reach for y in (2, -3) if -20 <= x + y <= 20} - reach
        if not more:
            break
        reach |= more
    assert reach == set(range(-20, 21))
    assert all(numeric.int_member([2, -3], n) for n in range(-20, 21))


def test_int_member_signs():
    assert numeric.int_member([-2, -7], -9)
    assert not numeric.int_member([-2, -7], 2)
    assert not numeric.int_member([4, -6], 3)


def test_chain_examples():
    rep = numeric.chain_stabilization([NumSgp.of(4), NumSgp.of(2), NumSgp.of(2)])
    assert rep.d == (4, 2, 2) and rep.stabilized_at == 2
    assert numeric.chain_stabilization([NumSgp.of(3, 5)] * 2).stabilized_at == 1
    rep = numeric.chain_stabilization([NumSgp.of(6, 10), NumSgp.of(2)])
    assert rep.d == (2, 2)
    assert rep.p == (segment_profile([6, 10])[1], 1)
    assert rep.stabilized_at == 2


def test_chain_not_ascending():
    with pytest.raises(numeric.NotAscendingError) as err:
        numeric.chain_stabilization([NumSgp.of(2), NumSgp.of(4)])
    assert err.value.pair == (1, 2)


def test_z2_examples():
    assert numeric.z2_member([(-2, 0), (1, 1)], (3, 1), 10) is False
    assert numeric.z2_member([(-2, 0), (3, 1)], (1, 1), 10) is True
    assert numeric.z2_member([(5, -1), (2, 3)], (2, 3), 1) is True


def test_z2_ungraded_reports_unknown():
    # mixed second coordinates: not found within the bound is not a "no"
    assert numeric.z2_member([(1, 1), (1, -1)], (1, 0), 4) is None
    assert numeric.z2_member([(1, 1), (1, -1)], (2, 0), 4) is True


def test_notts_small():
    assert numeric.notts_chain(3).strict == (True, True)
    assert numeric.notts_chain(2).strict == (True,)
    assert numeric.z2_member(numeric.notts_generators(2), (-2, 0), 5)
    assert numeric.z2_member(numeric.notts_generators(2), (1, 1), 5)


def test_notts_strict_to_25():
    rep = numeric.notts_chain(25)
    assert rep.all_strict and len(rep.strict) == 24


def test_profile_sweep_matches_oracle():
    for k in (1, 2, 3):
        for gens in combinations(range(2, 13), k):
            pr = numeric.profile(NumSgp(gens))
            assert (pr.d, pr.p) == segment_profile(gens)
            assert list(pr.minimal_generators) == minimal_generators(gens)


gen_sets = st.lists(st.integers(2, 12), min_size=1, max_size=3, unique=True)


@settings(max_examples=200, deadline=None)
@given(gen_sets)
def test_d_is_least_pairwise_gcd_of_members(gens):
    S = NumSgp(tuple(gens))
    hit = sums_up_to(gens, 400)
    members = [n for n in range(1, 401) if hit[n]][:50]
    d = numeric.profile(S).d
    assert d == pairwise_gcd_min(members) == reduce(gcd, gens)


@settings(max_examples=200, deadline=None)
@given(gen_sets)
def test_ultimately_a_segment(gens):
    pr = numeric.profile(NumSgp(tuple(gens)))
    for n in range(pr.p, pr.p + 5 * pr.d + 1):
        assert numeric.member(NumSgp(tuple(gens)), n) == (n % pr.d == 0)
    if pr.p > 1:
        # p is least: the multiple of d just below it is missing
        assert not numeric.member(NumSgp(tuple(gens)), pr.p - 1)


@settings(max_examples=200, deadline=None)
@given(gen_sets)
def test_minimal_generators_regenerate(gens):
    pr = numeric.profile(NumSgp(tuple(gens)))
    bound = pr.p + 10 * pr.d
    assert sums_up_to(pr.minimal_generators, bound) == sums_up_to(gens, bound)


@settings(max_examples=100, deadline=None)
@given(gen_sets, st.integers(0, 200))
def test_member_against_sums(gens, n):
    assert numeric.member(NumSgp(tuple(gens)), n) == sums_up_to(gens, max(n, 1))[n]
