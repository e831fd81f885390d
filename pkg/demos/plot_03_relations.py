"""
Pairs, sets and swaps
=====================

The decision procedures reduce membership to equations quantified over
relations computed from the morphism. Here are the ones for ``(ab)*``.
"""

from concat_hierarchy import regex_to_dfa, transition_monoid
from concat_hierarchy.relations import at_pairs, content_images, content_swaps, polst_pairs

sm = transition_monoid(regex_to_dfa("(ab)*"))
names = [sm.name(m) for m in range(sm.size)]

# images of the words with a given content
ci = content_images(sm)
for letters, elems in sorted(ci.as_dict().items(), key=lambda kv: sorted(kv[0])):
    print("".join(sorted(letters)) or "{}", "->", sorted(names[m] for m in elems))

# AT-pairs: both elements are reached by words of the same content
at = at_pairs(ci)
print("AT-pairs:", [(names[s], names[t]) for s in range(sm.size) for t in range(sm.size)
                    if at.matrix[s, t] and s < t])

# Pol(ST)-pairs: some word of image t has a subword of image s
pol = polst_pairs(sm)
print("(ab, ba) is a Pol(ST)-pair:", (sm.image("ab"), sm.image("ba")) in pol)

# content swaps: e, f share a content B, the others use letters of B only
swaps = content_swaps(ci)
print("swap (q,r,s,t,e,f) = (1,a,b,1,ab,ab):",
      swaps(0, sm.image("a"), sm.image("b"), 0, sm.image("ab"), sm.image("ab")))
