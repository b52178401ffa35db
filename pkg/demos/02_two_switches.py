"""
Alternating 4-cycles and 2-switches
===================================

A 2-switch on <a,b:c,d> trades edges ab, cd for bc, ad and keeps every
degree. Some switches change the isomorphism class, some do not.
"""

from twoswitch import (
    alternating_four_cycles,
    are_isomorphic,
    catalog,
    changes_isomorphism_class,
    degree_sequence,
    module_hypothesis,
    rho_is_automorphism,
    trace_census,
    two_switch,
)

P4 = catalog("P4")
(s,) = alternating_four_cycles(P4)
print("P4 has one switch:", s, "-> still a P4:", are_isomorphic(two_switch(P4, s), P4))

# on P5 one switch splits off a triangle
P5 = catalog("P5")
for s in alternating_four_cycles(P5):
    H = two_switch(P5, s)
    print(s, "->", "K3+K2" if are_isomorphic(H, catalog("K3+K2")) else "P5",
          "| degrees kept:", degree_sequence(H) == degree_sequence(P5))

# a switch that changes the class changes the triangle count; the census
# of outside vertices predicts by how much
for s in alternating_four_cycles(P5):
    c = trace_census(P5, s)
    print(s, c, "destroyed", c.triangles_destroyed(), "created", c.triangles_created(),
          "changes class:", changes_isomorphism_class(P5, s))

# module hypothesis: when {a,c} or {b,d} is a module after removing the
# other pair, the switch is just a relabelling
C5 = catalog("C5")
for s in alternating_four_cycles(C5):
    print("C5", s, "module:", module_hypothesis(C5, s), "rho automorphism:", rho_is_automorphism(C5, s))
