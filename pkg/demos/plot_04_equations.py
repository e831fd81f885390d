"""
Equations and their witnesses
=============================

Every failed equation comes with the least failing tuple and the
witness words of its elements, so it can be checked by hand.
"""

from concat_hierarchy import regex_to_dfa, transition_monoid
from concat_hierarchy.equations import check_eq_cacp, check_eq_csides, check_pol_equation, six_sides
from concat_hierarchy.relations import at_pairs, content_images, st_pairs, st_sets

sm = transition_monoid(regex_to_dfa("(ab)*"))

v = check_pol_equation(sm, sm.order, st_pairs(sm))
print(v.describe())

v = check_pol_equation(sm, sm.order, at_pairs(content_images(sm)))
print(v.describe())

# the pair equation holds once pairs are restricted to equal contents
print(check_eq_cacp(sm, at_pairs(content_images(sm))).describe())

# the six-variable equation fails on the group (aa)*
group = transition_monoid(regex_to_dfa("(aa)*"))
v = check_eq_csides(group, st_sets(group))
print(v.describe())
print("sides recomputed by hand:", six_sides(group, *v.elements), "vs", (v.lhs, v.rhs))
