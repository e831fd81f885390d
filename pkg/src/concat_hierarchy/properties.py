"""Property battery run over random morphisms (used by ``selftest``)."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .deciders import analyze
from .equations import check_eq_cacp, check_eq_capolcp, check_eq_csides, check_eq_swap
from .monoid import check_associative, green_relations, is_j_trivial
from .oracles import brute_green, enumerate_images, stabilization_bound
from .relations import (
    at_pairs,
    at_sets,
    content_images,
    content_swaps,
    polst_pairs,
    st_pairs,
    st_sets,
)
from .syntactic import SyntacticMorphism


def table_matches_transformations(sm: SyntacticMorphism) -> bool:
    """table[s, t] is the transformation 'apply s then t'."""
    f = sm.functions
    composed = f[:, None, :].repeat(sm.size, 1)  # composed[s, t, p] = s(p)
    composed = f[np.arange(sm.size)[None, :, None], composed]  # t(s(p))
    return bool(np.array_equal(f[sm.monoid.table], composed))


def associative(sm: SyntacticMorphism) -> bool:
    return check_associative(sm.monoid)


def green_matches_oracle(sm: SyntacticMorphism) -> bool:
    return green_relations(sm.monoid).same(brute_green(sm.monoid))


def green_lemmas(sm: SyntacticMorphism) -> bool:
    """t <=_J s and s <=_R t give s R t (dually for L); e H s gives s^w = e."""
    g = green_relations(sm.monoid)
    below = g.le_j.T  # below[s, t] = t <=_J s
    if ((below & g.le_r) & ~g.r).any() or ((below & g.le_l) & ~g.l).any():
        return False
    m = sm.monoid
    for e in m.idempotents:
        h_class = np.flatnonzero(g.h[e])
        if not (m.omega[h_class] == e).all():
            return False
    omega = m.omega
    return bool(m.idempotent_mask[omega].all())


def simon_agreement(sm: SyntacticMorphism) -> bool:
    eq = bool(check_eq_cacp(sm, st_pairs(sm))) and bool(check_eq_csides(sm, st_sets(sm)))
    return eq == is_j_trivial(green_relations(sm.monoid))


def pairs_closed(sm: SyntacticMorphism) -> bool:
    table = sm.monoid.table
    at = at_pairs(content_images(sm))
    pol = polst_pairs(sm)
    return (at.is_reflexive() and at.is_symmetric() and at.is_multiplicative(table)
            and pol.is_reflexive() and pol.is_multiplicative(table))


def polst_idempotent_pairs(sm: SyntacticMorphism) -> bool:
    """(e, s) an ST-pair with e idempotent gives (e, ese) a Pol(ST)-pair."""
    m = sm.monoid
    pol = polst_pairs(sm).matrix
    for e in m.idempotents:
        ese = m.table[m.table[e, :], e]
        if not pol[e, ese].all():
            return False
    return True


def capolcp_agreement(sm: SyntacticMorphism) -> bool:
    return bool(check_eq_cacp(sm, st_pairs(sm))) == bool(check_eq_capolcp(sm, polst_pairs(sm)))


def swap_agreement(sm: SyntacticMorphism) -> bool:
    ci = content_images(sm)
    return bool(check_eq_swap(sm, content_swaps(ci))) == bool(check_eq_csides(sm, at_sets(ci)))


def images_match_enumeration(sm: SyntacticMorphism) -> bool:
    images, exact = enumerate_images(sm, stabilization_bound(sm))
    return exact and images == {
        b: v for b, v in content_images(sm).as_dict().items() if v
    }


def verdict_chain(sm: SyntacticMorphism) -> bool:
    analyze(sm.dfa)  # raises on a broken chain or a BPol(ST) disagreement
    return True


PROPERTIES: dict[str, Callable[[SyntacticMorphism], bool]] = {
    "transformations": table_matches_transformations,
    "associativity": associative,
    "green_oracle": green_matches_oracle,
    "green_lemmas": green_lemmas,
    "simon": simon_agreement,
    "pair_closure": pairs_closed,
    "polst_idempotent_pairs": polst_idempotent_pairs,
    "capolcp_equivalence": capolcp_agreement,
    "swap_equivalence": swap_agreement,
    "content_images": images_match_enumeration,
    "verdict_chain": verdict_chain,
}
