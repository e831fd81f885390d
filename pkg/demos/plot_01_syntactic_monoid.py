"""
From a regular expression to its syntactic monoid
=================================================

Compile ``(ab)*`` to its minimal automaton, close the letter
transformations into a monoid and look at its Green structure.
"""

from concat_hierarchy import green_relations, regex_to_dfa, transition_monoid

# the minimal DFA is canonical: states are numbered in BFS order
dfa = regex_to_dfa("(ab)*")
print("states:", dfa.n_states, "transitions:", dfa.delta)

# every element carries its shortlex-least witness word
sm = transition_monoid(dfa)
for m in range(sm.size):
    print(f"m{m} = {sm.name(m)}")
print("accepting images:", [sm.name(m) for m in sorted(sm.accepting)])

# idempotents and the omega power of each element
mon = sm.monoid
print("idempotents:", [sm.name(int(e)) for e in mon.idempotents])
print("a^omega =", sm.name(int(mon.omega[sm.image("a")])))

# a, b, ab and ba form one J-class, so the monoid is not J-trivial
g = green_relations(mon)
for cls in g.j_classes:
    print("J-class:", [sm.name(m) for m in cls])
