import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from concat_hierarchy.errors import InputError
from concat_hierarchy.monoid import (
    FiniteMonoid,
    check_associative,
    green_relations,
    is_aperiodic,
    is_j_trivial,
    omega_power,
)
from concat_hierarchy.oracles import RandomMorphismSpec, brute_green, random_morphism

from conftest import morphism


def reduce_alternating(word):
    """Normal form in the monoid of (ab)*: 1, a, b, ab, ba or 0."""
    if "aa" in word or "bb" in word or word == "0" or "0" in word:
        return "0"
    if not word:
        return ""
    return {("a", "a"): "a", ("a", "b"): "ab", ("b", "b"): "b", ("b", "a"): "ba"}[
        (word[0], word[-1])]


def hand_monoid(elements, reduce):
    idx = {w: i for i, w in enumerate(elements)}
    table = np.array([[idx[reduce(x + y)] for y in elements] for x in elements], dtype=np.int32)
    return FiniteMonoid(table), idx


def cyclic(n):
    return FiniteMonoid(np.add.outer(np.arange(n), np.arange(n)) % n)


def test_identity_required():
    with pytest.raises((InputError, ValueError)):
        FiniteMonoid(np.array([[1, 0], [0, 1]]))


def test_ab_star_by_hand_matches_transition_monoid(ab_star):
    hand, idx = hand_monoid(["", "a", "b", "ab", "ba", "0"], reduce_alternating)
    assert check_associative(hand)
    assert ab_star.size == 6
    # translate each transition-monoid element to the hand normal form of its witness
    to_hand = [idx[reduce_alternating(w)] for w in ab_star.witnesses]
    assert sorted(to_hand) == list(range(6))
    t = ab_star.monoid.table
    for s, u in itertools.product(range(6), repeat=2):
        assert to_hand[t[s, u]] == hand.table[to_hand[s], to_hand[u]]


def test_ab_star_structure(ab_star):
    m = ab_star.monoid
    names = {ab_star.name(i): i for i in range(m.size)}
    assert sorted(ab_star.name(int(e)) for e in m.idempotents) == sorted(["1", "ab", "ba", "aa"])
    assert m.omega[names["a"]] == names["aa"]
    assert is_aperiodic(m)
    g = green_relations(m)
    assert not is_j_trivial(g)
    assert sorted(len(c) for c in g.j_classes) == [1, 1, 4]
    big = next(c for c in g.j_classes if len(c) == 4)
    assert {ab_star.name(i) for i in big} == {"a", "b", "ab", "ba"}
    assert g.r[names["a"], names["ab"]] and g.l[names["a"], names["ba"]]
    assert not g.h[names["a"], names["b"]]


def test_aa_star_is_a_group(aa_star):
    m = aa_star.monoid
    assert m.size == 2
    assert list(m.idempotents) == [0]
    assert not is_aperiodic(m)
    assert m.omega[1] == 0 and m.omega_plus[1] == 1
    g = green_relations(m)
    assert len(g.j_classes) == 1 and not is_j_trivial(g)


def test_contains_a_is_semilattice(contains_a):
    m = contains_a.monoid
    assert m.size == 2
    assert m.idempotent_mask.all()
    assert is_j_trivial(green_relations(m))


def test_subword_ab_monoid_is_j_trivial():
    sm = morphism("(a|b)*a(a|b)*b(a|b)*")
    assert is_aperiodic(sm.monoid)
    assert is_j_trivial(green_relations(sm.monoid))


def test_trivial_monoid():
    m = FiniteMonoid.trivial()
    assert m.size == 1 and is_aperiodic(m) and is_j_trivial(green_relations(m))


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6])
def test_cyclic_groups(n):
    m = cyclic(n)
    assert check_associative(m)
    assert list(m.idempotents) == [0]
    assert (m.omega == 0).all()
    assert is_aperiodic(m) == (n == 1)
    assert green_relations(m).same(brute_green(m))


def test_mul_and_power():
    m = cyclic(5)
    assert m.mul(1, 2, 3) == 1
    assert m.mul() == 0
    assert m.power(2, 3) == 1
    assert m.power(4, 0) == 0
    assert omega_power(m, 3) == 0


def test_associativity_detects_mutation(ab_star):
    table = ab_star.monoid.table.copy()
    table[5, 5] = (table[5, 5] + 1) % 6
    assert not check_associative(FiniteMonoid(table))


def random_sm(seed):
    return random_morphism(RandomMorphismSpec(seed, max_states=5, alphabet_size=3, monoid_cap=80))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_green_matches_definitions(seed):
    m = random_sm(seed).monoid
    g = green_relations(m)
    assert g.same(brute_green(m))
    # preorders are reflexive and transitive; H is L and R
    for rel in (g.le_j, g.le_l, g.le_r):
        assert rel.diagonal().all()
        assert not ((rel.astype(int) @ rel.astype(int) > 0) & ~rel).any()
    assert np.array_equal(g.h, g.l & g.r)
    assert not ((g.le_l | g.le_r) & ~g.le_j).any()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_green_lemmas(seed):
    m = random_sm(seed).monoid
    g = green_relations(m)
    n = m.size
    for s, t in itertools.product(range(n), repeat=2):
        if g.le_j[t, s] and g.le_r[s, t]:
            assert g.r[s, t]
        if g.le_j[t, s] and g.le_l[s, t]:
            assert g.l[s, t]
    for e in m.idempotents:
        for s in np.flatnonzero(g.h[e]):
            assert m.omega[s] == e


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_omega_is_unique_idempotent_power(seed):
    m = random_sm(seed).monoid
    for s in range(m.size):
        powers = {m.power(s, k) for k in range(1, m.size + 2)}
        idem = [p for p in powers if m.table[p, p] == p]
        assert idem == [m.omega[s]]
        assert m.omega_plus[s] == m.table[m.omega[s], s]
