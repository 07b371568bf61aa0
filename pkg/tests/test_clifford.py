import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import generated, green_h_classes, green_j_classes, is_associative, relative_h_classes
from takahasi import clifford, finite, groups
from takahasi.clifford import CliffordError, SemilatticeOfGroups
from takahasi.finite import NotHomomorphism

C2 = groups.cyclic(2)


def two_level():
    """C2 over C2 with the identity link."""
    return clifford.chain([C2, C2], [(0, 1)])


def instance(seed):
    rng = np.random.default_rng(seed)
    S = clifford.random_instance(rng, 6)
    gens, T = clifford.random_subalgebra(rng, S)
    return S, gens, T


seeds = st.integers(0, 100_000)


def test_multiply_examples():
    C4 = groups.cyclic(4)
    S = clifford.chain([C2, C4], [tuple(x % 2 for x in range(4))])
    assert S.multiply((1, 3), (0, 0)) == (0, 1)
    assert S.multiply((1, 3), (1, 2)) == (1, 1)
    assert S.multiply((0, 1), (1, 2)) == (0, 1)
    T = two_level()
    assert T.multiply((1, 0), (0, 1)) == (0, 1)


def test_links_are_validated():
    with pytest.raises(CliffordError):
        SemilatticeOfGroups([[0, 0], [0, 1]], [C2, C2], {(1, 0): (1, 0)})
    with pytest.raises(CliffordError):
        SemilatticeOfGroups([[0, 1], [0, 1]], [C2, C2], {(1, 0): (0, 1)})
    with pytest.raises(CliffordError):
        SemilatticeOfGroups([[0, 0], [0, 1]], [C2, C2], {})


def test_closure_examples():
    S = two_level()
    assert S.closure([(1, 0)]) == {(1, 0)}
    assert S.closure([(1, 1)]) == {(1, 0), (1, 1)}
    mixed = S.closure([(1, 1), (0, 0)])
    assert (0, 1) in mixed
    with pytest.raises(CliffordError):
        S.closure([])


def test_index_examples():
    S = two_level()
    full = clifford.index(S, S.elements())
    assert full.per_class == (1, 1) and full.sup == 1
    top = clifford.index(S, [(1, 0), (1, 1)])
    assert sorted(top.per_class) == [1, 2] and top.sup == 2
    C6 = groups.cyclic(6)
    U = clifford.chain([C6, C2], [(0, 3)])
    assert clifford.index(U, [(1, 0), (1, 1)]).per_class[0] == 6
    with pytest.raises(CliffordError):
        clifford.index(S, [(1, 1)])


def test_green_index_examples():
    S = two_level()
    assert clifford.green_index(S, S.elements()).green == 1
    assert clifford.green_index(S, [(1, 0), (1, 1)]).green == 2


@pytest.mark.parametrize("name", ["C6", "S3", "D4", "Q8", "C2xC4"])
def test_single_group_matches_classical_index(name):
    G = groups.by_name(name)
    S = clifford.single_group(G)
    for H in groups.subgroups(G):
        T = [(0, g) for g in H.elements]
        rep = clifford.green_index(S, T)
        assert rep.sup == groups.index(G, H)
        if H.is_normal():
            assert rep.green == groups.index(G, H)


def test_retraction_examples():
    S = two_level()
    rep = clifford.retraction_check(S, S.elements(), 0)
    assert rep.holds and rep.rk_g <= rep.rk_c
    top = [(1, 0), (1, 1)]
    inside = clifford.retraction_check(S, top, 1)
    assert inside.rk_g == inside.rk_c == 1
    assert all(inside.psi[t] == t for t in top)
    with pytest.raises(CliffordError):
        clifford.retraction_check(S, top, 0)


def test_fix_and_per_examples():
    S = two_level()
    ident = S.elements()
    assert clifford.fix(S, ident).elements == set(S.elements())
    collapse = clifford.collapse_endo(S, 1, 0)
    direct = {x for x, y in zip(S.elements(), collapse) if x == y}
    assert clifford.fix(S, collapse).elements == direct == {(0, 0), (0, 1)}
    k, P, R = clifford.per(S, collapse)
    assert P == direct and R == 1 and k <= S.order
    assert clifford.level_image_chain(S, collapse) == [frozenset({0, 1}), frozenset({0})]
    with pytest.raises(NotHomomorphism):
        clifford.fix(S, [(1, 1)] * S.order)


def test_json_round_trip():
    S = two_level()
    back = SemilatticeOfGroups.from_dict(S.to_dict())
    assert back.elements() == S.elements()
    assert back.algebra.mul == S.algebra.mul


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_strong_semilattice_laws(seed):
    S, _, _ = instance(seed)
    mul = S.algebra.mul
    assert is_associative(mul)
    for a in range(S.levels):
        e = S.identity(a)
        for x in S.elements():
            assert S.multiply(e, x) == S.multiply(x, e)
    assert set(green_h_classes(mul)) == set(green_j_classes(mul))
    assert set(finite.h_classes(S.algebra)) == {frozenset(S.codes([x for x in S.elements() if x[0] == a]))
                                                for a in range(S.levels)}


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_indices_against_brute_force(seed):
    S, gens, T = instance(seed)
    alg = S.algebra
    assert set(S.codes(T)) == generated(alg.mul, S.codes(gens), alg.unary)
    rep = clifford.green_index(S, T)
    for a in range(S.levels):
        Ga = S.groups[a].order
        meet = sum(1 for x in T if x[0] == a)
        assert rep.per_class[a] * max(meet, 1) == Ga
    assert rep.sup == max(rep.per_class)
    classes = relative_h_classes(alg.mul, S.codes(T), range(S.order))
    outside = [c for c in classes if not set(c) & set(S.codes(T))]
    assert rep.green == len(outside) + 1
    assert rep.h_t_classes == len(classes)
    assert 1 <= rep.green <= rep.h_t_classes


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_retraction_on_random_subalgebras(seed):
    S, gens, T = instance(seed)
    for a in {x[0] for x in T}:
        rep = clifford.retraction_check(S, T, a, upper=len(set(gens)))
        assert rep.holds
        assert rep.rk_c <= len(set(gens))
        TH = {x for x in T if x[0] == a}
        assert {t for t, v in rep.psi.items() if v is not None} == rep.t_prime >= TH


@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(1, 4), st.integers(1, 3))
def test_fix_on_chains(seed, m, c):
    rng = np.random.default_rng(seed)
    pool = groups.library(6)
    g0, g1 = pool[int(rng.integers(len(pool)))], pool[int(rng.integers(len(pool)))]
    S = clifford.chain([g0, g1], [clifford.random_hom(rng, g1, g0)])
    phi = clifford.validate_endo(S, clifford.collapse_endo(S, 1, 0))
    powm = finite.compose_power(phi, m)
    assert finite.fixed_points(powm) <= finite.fixed_points(finite.compose_power(phi, m * c))
    res = clifford.fix(S, phi)
    assert set(res.by_class) == {0}
    k, P, R = clifford.per(S, phi)
    assert P == res.elements and R == 1
