import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from concat_hierarchy.automata import regex_to_dfa, words
from concat_hierarchy.errors import ResourceError
from concat_hierarchy.oracles import (
    RandomMorphismSpec,
    brute_syntactic_order,
    contexts_separate,
    random_morphism,
)
from concat_hierarchy.syntactic import recognizes_check, syntactic_order, transition_monoid

from conftest import FIXTURES, morphism


@pytest.mark.parametrize("key,size,accepting", [
    ("ab_star", 6, {"1", "ab"}),
    ("aa_star", 2, {"1"}),
    ("contains_a", 2, {"a"}),
    ("b_star", 2, {"1"}),
    ("subword_ab", 5, {"ab"}),
])
def test_fixture_monoids(key, size, accepting):
    sm = morphism(*FIXTURES[key])
    assert sm.size == size
    assert {sm.name(s) for s in sm.accepting} == accepting


def test_witnesses_are_shortlex_least(ab_star):
    assert ab_star.witnesses == ("", "a", "b", "aa", "ab", "ba")
    for s, w in enumerate(ab_star.witnesses):
        assert ab_star.image(w) == s
        shorter = [u for u in words("ab", len(w)) if (len(u), u) < (len(w), w)]
        assert all(ab_star.image(u) != s for u in shorter)


def test_order_examples(contains_a, b_star, aa_star, ab_star):
    # contains an a: 1 <= a (the accepting set is an upper set)
    one, a = 0, contains_a.image("a")
    assert contains_a.order[one, a] and not contains_a.order[a, one]
    # b*: the image of a sits below 1
    assert b_star.order[b_star.image("a"), 0] and not b_star.order[0, b_star.image("a")]
    assert np.array_equal(aa_star.order, np.eye(2, dtype=bool))
    zero = ab_star.image("aa")
    assert ab_star.order[zero].all()  # 0 is the bottom
    # beyond the bottom element, only ab <= 1 and ba <= 1
    pairs = {(ab_star.name(s), ab_star.name(t)) for s, t in zip(*np.nonzero(ab_star.order))
             if s != t and s != zero}
    assert pairs == {("ab", "1"), ("ba", "1")}


def test_monoid_cap():
    with pytest.raises(ResourceError, match="cap of 3"):
        transition_monoid(regex_to_dfa("(ab)*"), max_size=3)


def test_recognizes_check_detects_wrong_accepting_set(ab_star):
    d = regex_to_dfa("(ab)*")
    assert recognizes_check(ab_star, d, 8)
    wrong = ab_star.monoid.size * [False]
    wrong[ab_star.image("a")] = True
    assert not recognizes_check(ab_star.with_accepting(wrong), d, 8)


def random_sm(seed):
    return random_morphism(RandomMorphismSpec(seed, max_states=5, alphabet_size=3, monoid_cap=80))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_morphism_invariants(seed):
    sm = random_sm(seed)
    assert recognizes_check(sm, sm.dfa, 7)
    assert contexts_separate(sm)
    for s, w in enumerate(sm.witnesses):
        assert sm.image(w) == s
    for i, a in enumerate(sm.alphabet):
        assert sm.letters[i] == sm.image(a)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_order_matches_context_definition(seed):
    sm = random_sm(seed)
    order = syntactic_order(sm)
    assert np.array_equal(order, brute_syntactic_order(sm))
    acc = sm.accepting_mask
    # accepting set is an upper set; order is compatible with multiplication
    assert not (order & acc[:, None] & ~acc[None, :]).any()
    t = sm.monoid.table
    for s, u in zip(*np.nonzero(order)):
        assert order[t[s], t[u]].all() and order[t[:, s], t[:, u]].all()
