"""
Cross-checking on random automata
=================================

A J-trivial syntactic monoid characterizes piecewise testability, which
gives an independent check of the equation route.
"""

import numpy as np

from concat_hierarchy.equations import check_eq_cacp, check_eq_csides
from concat_hierarchy.monoid import green_relations, is_j_trivial
from concat_hierarchy.oracles import RandomMorphismSpec, random_morphism
from concat_hierarchy.relations import st_pairs, st_sets

sizes, agree, jt = [], 0, 0
for seed in range(100):
    sm = random_morphism(RandomMorphismSpec(seed))
    by_equations = bool(check_eq_cacp(sm, st_pairs(sm))) and bool(check_eq_csides(sm, st_sets(sm)))
    by_green = is_j_trivial(green_relations(sm.monoid))
    agree += by_equations == by_green
    jt += by_green
    sizes.append(sm.size)

print(f"agreement {agree}/100, J-trivial {jt}, monoid sizes mean {np.mean(sizes):.1f} max {max(sizes)}")
