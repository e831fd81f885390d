import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from concat_hierarchy.oracles import (
    RandomMorphismSpec,
    enumerate_images,
    random_morphism,
    separable_by_upward_closure,
    stabilization_bound,
    subword_pair_reachability,
)
from concat_hierarchy.relations import (
    at_pairs,
    at_set_query,
    at_sets,
    content_images,
    content_swaps,
    polst_pairs,
    st_pairs,
    st_set_query,
    st_sets,
)

from conftest import morphism


def named(sm, elements):
    return {sm.name(x) for x in elements}


def test_content_images_ab_star(ab_star):
    ci = content_images(ab_star)
    assert named(ab_star, ci.image("")) == {"1"}
    assert named(ab_star, ci.image("a")) == {"a", "aa"}
    assert named(ab_star, ci.image("b")) == {"b", "aa"}
    assert named(ab_star, ci.image("ab")) == {"a", "b", "ab", "ba", "aa"}
    assert named(ab_star, ci.image_upto("a")) == {"1", "a", "aa"}
    assert ci.maximal_masks == (0, ci.mask("ab"))  # {1} is not inside Im_{a,b}


def test_content_images_b_star(b_star):
    ci = content_images(b_star)
    assert named(b_star, ci.image("b")) == {"1"}
    assert named(b_star, ci.image("a")) == {"a"}
    assert named(b_star, ci.image("ab")) == {"a"}
    # Im_{} and Im_{b} tie; the first is kept
    assert ci.maximal_masks == (0, ci.mask("a"))


def test_at_pairs_examples(ab_star, b_star):
    pairs = at_pairs(content_images(ab_star))
    ab, ba, a, one = (ab_star.image(w) for w in ("ab", "ba", "a", ""))
    assert (ab, ba) in pairs and (ab, a) in pairs
    assert (one, ab) not in pairs
    bp = at_pairs(content_images(b_star))
    assert (0, b_star.image("a")) not in bp


def test_st_relations(ab_star):
    assert st_pairs(ab_star).matrix.all()
    assert st_sets(ab_star)(range(6))
    assert st_set_query({0, 3})
    with pytest.raises(ValueError):
        st_set_query(set())
    with pytest.raises(ValueError):
        st_sets(ab_star)([])


def test_at_set_examples(ab_star):
    ci = content_images(ab_star)
    a, b, ab, one = (ab_star.image(w) for w in ("a", "b", "ab", ""))
    assert at_set_query(ci, {a, b, ab})
    assert not at_set_query(ci, {one, a})
    assert at_set_query(ci, {one})


def test_polst_pairs_examples(ab_star, contains_a):
    pol = polst_pairs(ab_star)
    one, ab, ba = (ab_star.image(w) for w in ("", "ab", "ba"))
    assert pol.matrix[one].all()  # A* is the closure of the empty word
    assert pol.matrix[:, one].sum() == 1  # only the empty word maps to 1
    assert (ab, ba) in pol
    p2 = polst_pairs(contains_a)
    a = contains_a.image("a")
    assert (0, a) in p2 and (a, 0) not in p2


def test_swaps_examples(ab_star):
    swaps = content_swaps(content_images(ab_star))
    a, b, ab, one = (ab_star.image(w) for w in ("a", "b", "ab", ""))
    assert swaps(one, one, one, one, ab, a)
    assert swaps(one, a, b, one, ab, ab)
    assert not swaps(one, one, one, one, one, a)
    assert len(swaps.domains()) == 2


def random_sm(seed, cap=60):
    return random_morphism(RandomMorphismSpec(seed, max_states=5, alphabet_size=3, monoid_cap=cap))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_content_images_match_enumeration(seed):
    sm = random_sm(seed)
    images, exact = enumerate_images(sm, stabilization_bound(sm))
    assert exact
    expected = {b: v for b, v in content_images(sm).as_dict().items() if v}
    assert images == expected


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_pair_relations_are_closed(seed):
    sm = random_sm(seed)
    t = sm.monoid.table
    at = at_pairs(content_images(sm))
    pol = polst_pairs(sm)
    assert at.is_reflexive() and at.is_symmetric() and at.is_multiplicative(t)
    assert pol.is_reflexive() and pol.is_multiplicative(t)
    assert np.array_equal(pol.matrix, subword_pair_reachability(sm))
    # every Pol(ST)-pair is an ST-pair, and AT-pairs lie inside ST-pairs
    assert not (pol.matrix & ~st_pairs(sm).matrix).any()


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_polst_pairs_match_separation(seed):
    sm = random_sm(seed, cap=20)
    pol = polst_pairs(sm)
    for s, t in itertools.product(range(sm.size), repeat=2):
        assert pol.matrix[s, t] == (not separable_by_upward_closure(sm, s, t))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_polst_idempotent_pairs(seed):
    sm = random_sm(seed)
    m = sm.monoid
    pol = polst_pairs(sm).matrix
    for e in m.idempotents:
        for s in range(m.size):
            assert pol[e, m.mul(e, s, e)]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_set_family_is_downward_closed(seed):
    sm = random_sm(seed, cap=30)
    ci = content_images(sm)
    fam = at_sets(ci)
    for b in range(ci.exact.shape[0]):
        members = np.flatnonzero(ci.exact[b])
        if len(members):
            assert fam(members)
            assert all(fam([x]) for x in members)
    # a set is an AT-set exactly when it fits inside some Im_B
    rng = np.random.default_rng(seed)
    for _ in range(20):
        k = int(rng.integers(1, min(4, sm.size) + 1))
        subset = rng.choice(sm.size, size=k, replace=False)
        assert fam(subset) == any(ci.exact[b][subset].all() for b in range(ci.exact.shape[0]))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_swap_oracle_matches_definition(seed):
    sm = random_sm(seed, cap=8)
    ci = content_images(sm)
    swaps = content_swaps(ci)
    images, _ = enumerate_images(sm, stabilization_bound(sm))
    rng = np.random.default_rng(seed)
    for _ in range(50):
        q, r, s, t, e, f = (int(x) for x in rng.integers(0, sm.size, 6))
        expected = any(
            {e, f} <= im and all(
                x in set().union(*(v for c, v in images.items() if c <= b)) for x in (q, r, s, t))
            for b, im in images.items())
        assert swaps(q, r, s, t, e, f) == expected
