"""
Small graphs, graph6 and canonical forms
========================================

Build a few graphs by name and by edge list, move them through graph6,
and compare them up to isomorphism.
"""

from twoswitch import (
    are_isomorphic,
    canonical_form,
    catalog,
    complement,
    degree_sequence,
    find_isomorphism,
    from_edge_list,
    from_graph6,
    relabel,
    to_graph6,
)

# the catalog understands names, + (disjoint union) and v (join)
U = catalog("U")
print("U:", to_graph6(U), degree_sequence(U))
print("(K2+K1)v(K2+K1):", to_graph6(catalog("(K2+K1)v(K2+K1)")))

# graph6 round trip is exact
P5 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
assert from_graph6(to_graph6(P5)) == P5

# the complement of P5 is the house
print("co-P5 is the house:", are_isomorphic(complement(P5), catalog("house")))

# canonical codes ignore vertex labels
shuffled = relabel(U, [3, 5, 0, 1, 4, 2])
print("same code after relabelling:", canonical_form(U) == canonical_form(shuffled))
print("an explicit isomorphism:", find_isomorphism(U, shuffled))

# 4-pan and co-4-pan share a degree sequence but are different graphs
pan, copan = catalog("4-pan"), catalog("co-4-pan")
print(degree_sequence(pan), degree_sequence(copan), are_isomorphic(pan, copan))
