"""
The ordered syntactic monoid
============================

``s <= t`` when every context accepting ``s`` also accepts ``t``. The
accepting set is then an upper set, which is what the polynomial
equations need.
"""

import numpy as np

from concat_hierarchy import regex_to_dfa, transition_monoid
from concat_hierarchy.oracles import brute_syntactic_order

for regex, alphabet in [("(a|b)*a(a|b)*", None), ("b*", "ab"), ("(ab)*", None)]:
    sm = transition_monoid(regex_to_dfa(regex, alphabet))
    pairs = [(sm.name(s), sm.name(t)) for s, t in zip(*np.nonzero(sm.order)) if s != t]
    print(f"{regex:<16}", pairs)
    # the fast residual-inclusion route agrees with the context definition
    assert np.array_equal(sm.order, brute_syntactic_order(sm))
