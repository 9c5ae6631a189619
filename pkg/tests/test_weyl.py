"""Lattice, affine roots, and affine Weyl group combinatorics."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import window
from hecke_bose import weyl
from hecke_bose.functions import random_rational_function
from hecke_bose.weyl import (
    AffineRoot,
    Params,
    act,
    act_on_function,
    compose,
    eval_root,
    from_word,
    identity_element,
    inverse,
    inversion_set,
    is_dominant,
    pi_element,
    reflect,
    shortest_element,
    simple_reflection_element,
    simple_root,
    translation_element,
)


def test_params_validation():
    with pytest.raises(ValueError):
        Params(1, 2)
    with pytest.raises(ValueError):
        Params(2, 0)
    with pytest.raises(ValueError):
        Params(2, 2, Fraction(1), Fraction(0))


def test_affine_root_requires_distinct_indices():
    with pytest.raises(ValueError):
        AffineRoot(1, 1, 0)


def test_eval_root_examples():
    assert eval_root(AffineRoot(1, 2, 0), (3, 1), 2) == 2
    assert eval_root(AffineRoot(2, 1, 1), (0, 0), 2) == 2  # a_0 at the origin
    assert eval_root(AffineRoot(1, 2, 0), (5, 5), 2) == 0


def test_reflect_examples():
    assert reflect(simple_root(1, 2), (0, 1), 2) == (1, 0)
    assert reflect(simple_root(0, 2), (3, 0), 2) == (2, 1)


def test_reflect_fixes_hyperplane_and_is_involution():
    a = AffineRoot(1, 3, 1)
    for x in window(3, 2):
        assert reflect(a, reflect(a, x, 2), 2) == x
        if eval_root(a, x, 2) == 0:
            assert reflect(a, x, 2) == x


def test_act_examples():
    assert act(identity_element(2), (5, -3)) == (5, -3)
    assert act(pi_element(2, 2), (0, 0)) == (2, 0)
    assert act(translation_element((2, -2)), (1, 1)) == (3, -1)


def test_act_is_group_action():
    rng = random.Random("action")
    k, L = 3, 2
    for _ in range(50):
        u = from_word([rng.randrange(k) for _ in range(rng.randint(0, 6))], k, L)
        v = from_word([rng.randrange(k) for _ in range(rng.randint(0, 6))], k, L)
        x = tuple(rng.randint(-4, 4) for _ in range(k))
        assert act(compose(u, v), x) == act(u, act(v, x))
        assert act(compose(u, inverse(u)), x) == x


@given(st.lists(st.integers(0, 2), max_size=5), st.lists(st.integers(0, 2), max_size=5))
@settings(max_examples=40, deadline=None)
def test_act_on_function_is_action(wu, wv):
    k, L = 3, 2
    f = random_rational_function("fn-action")
    u = from_word(wu, k, L)
    v = from_word(wv, k, L)
    lhs = act_on_function(u, act_on_function(v, f))
    rhs = act_on_function(compose(u, v), f)
    for x in [(0, 0, 0), (1, -2, 3), (-4, 4, 0)]:
        assert lhs(x) == rhs(x)


def test_act_on_function_shift_convention():
    f = random_rational_function("shift")
    t = translation_element((1, 0))
    g = act_on_function(t, f)
    for x in window(2, 3):
        assert g(x) == f((x[0] - 1, x[1]))


def test_act_on_function_reflection_involutive():
    f = random_rational_function("refl")
    s1 = simple_reflection_element(1, 2, 2)
    g = act_on_function(s1, f)
    for x in window(2, 3):
        assert g(x) == f(reflect(simple_root(1, 2), x, 2))
        assert act_on_function(s1, g)(x) == f(x)


@pytest.mark.parametrize("k,L", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_coxeter_relations_on_lattice(k, L):
    pts = list(window(k, 2))
    for i in range(k):
        si = simple_reflection_element(i, k, L)
        for x in pts:
            assert act(si, act(si, x)) == x
    if k >= 3:
        for i in range(k):
            j = (i + 1) % k
            si, sj = (simple_reflection_element(n, k, L) for n in (i, j))
            for x in pts:
                assert act(si, act(sj, act(si, x))) == act(sj, act(si, act(sj, x)))
    for i in range(k):
        for j in range(i + 1, k):
            if (j - i) % k in (1, k - 1):
                continue
            si, sj = (simple_reflection_element(n, k, L) for n in (i, j))
            for x in pts:
                assert act(si, act(sj, x)) == act(sj, act(si, x))


@pytest.mark.parametrize("k,L", [(2, 2), (3, 2), (4, 3)])
def test_pi_conjugates_generators(k, L):
    # pi^{-1} s_i pi = s_{i-1 mod k}: the rotation shifts the Dynkin cycle
    pi = pi_element(k, L)
    piinv = inverse(pi)
    for i in range(k):
        si = simple_reflection_element(i, k, L)
        target = simple_reflection_element((i - 1) % k, k, L)
        for x in window(k, 2):
            assert act(piinv, act(si, act(pi, x))) == act(target, x)


@pytest.mark.parametrize("k,L", [(2, 2), (3, 2), (3, 3)])
def test_dominance_and_shortest_element(k, L):
    params = Params(k, L)
    for x in window(k, 3):
        w, word = shortest_element(x, params)
        y = act(w, x)
        assert is_dominant(y, params)
        assert from_word(word, k, L) == w
        assert len(word) == len(inversion_set(x, params))
        if is_dominant(x, params):
            assert word == ()
            assert w == identity_element(k)


def test_shortest_element_examples():
    params = Params(2, 2)
    w, word = shortest_element((0, 1), params)
    assert word == (1,)
    w, word = shortest_element((3, 0), params)
    assert word == (0,)


def test_inversion_set_examples():
    params = Params(2, 2)
    assert inversion_set((0, 0), params) == set()
    assert inversion_set((0, 1), params) == {AffineRoot(1, 2, 0)}


def _image_root(w, a, k, L):
    """The affine root w(a), i.e. x -> a(w^{-1} x)."""
    winv = inverse(w)
    ni = w.perm[a.i - 1] + 1
    nj = w.perm[a.j - 1] + 1
    val0 = eval_root(a, act(winv, (0,) * k), L)
    m = (val0 - eval_root(AffineRoot(ni, nj, 0), (0,) * k, L)) // L
    return AffineRoot(ni, nj, m)


def test_inversion_set_matches_word_reflections():
    # I(x) = { s_{i_r} ... s_{i_{p+1}} (a_{i_p}) } read off the reduced word
    k, L = 3, 2
    params = Params(k, L)
    for x in [(0, 1, 2), (-2, 3, 1), (2, -1, -3), (1, 1, 4)]:
        _, word = shortest_element(x, params)
        roots = set()
        for p in range(len(word)):
            u = from_word(tuple(reversed(word[p + 1 :])), k, L)
            roots.add(_image_root(u, simple_root(word[p], k), k, L))
        assert roots == inversion_set(x, params)


@pytest.mark.parametrize("k,L", [(2, 2), (3, 2)])
def test_length_additivity_toward_chamber(k, L):
    # For v1 with I(v1) contained in I(v2): w_{v2} = w_{w_{v1} v2} w_{v1}
    # with additive lengths; exercised at points and their half-step midpoints.
    params = Params(k, L)
    rng = random.Random("lemma-key")
    half = Fraction(1, 2)
    for _ in range(200):
        x = tuple(rng.randint(-4, 4) for _ in range(k))
        i = rng.randrange(k)
        xprime = tuple(c - (half if n == i else 0) for n, c in enumerate(x))
        for v1 in (x, tuple(c - (1 if n == i else 0) for n, c in enumerate(x))):
            inv1 = inversion_set(v1, params)
            inv2 = inversion_set(xprime, params)
            assert inv1 <= inv2  # the containment from the half-step argument
            w1, word1 = shortest_element(v1, params)
            moved = act(w1, xprime)
            w2, word2 = shortest_element(moved, params)
            wfull, wordfull = shortest_element(xprime, params)
            assert compose(w2, w1) == wfull
            assert len(wordfull) == len(word1) + len(word2)


@pytest.mark.parametrize("k,L", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_orbit_meets_chamber_once(k, L):
    params = Params(k, L)
    # the dominant representative is constant along generator moves
    for x in window(k, 2):
        rep = act(*_shortest_pair(x, params))
        for i in range(k):
            y = reflect(simple_root(i, k), x, L)
            assert act(*_shortest_pair(y, params)) == rep


def _shortest_pair(x, params):
    w, _ = shortest_element(x, params)
    return w, x


def test_in_affine_weyl_group():
    k, L = 3, 2
    w = from_word([0, 1, 2, 0], k, L)
    assert w.in_affine_weyl_group(L)
    assert not pi_element(k, L).in_affine_weyl_group(L)
