"""
Degree sequences, realizations and transition graphs
====================================================

Enumerate the realizations of a degree sequence and join two of them when
one 2-switch turns one into the other.
"""

from twoswitch import (
    construct_realization,
    count_realizations,
    enumerate_graphs,
    enumerate_realizations,
    graphical_sequences,
    is_graphical,
    to_graph6,
    transition_graph,
)
from twoswitch.enumeration import is_connected

print(is_graphical((4, 2, 2, 2, 2, 2)), is_graphical((3, 3, 1)))
print("Havel-Hakimi:", to_graph6(construct_realization((3, 2, 2, 2, 1))))

for d in [(4, 2, 2, 2, 2, 2), (3, 2, 2, 2, 1), (2, 2, 2, 2, 2, 2), (3, 3, 2, 2, 2, 2)]:
    print(d, [to_graph6(g) for g in enumerate_realizations(d)])

t = transition_graph((3, 3, 2, 2, 2, 2))
print(t.to_json())
print(t.to_dot())

# the sequence with the most realizations among length 7
d = max(graphical_sequences(7), key=count_realizations)
t = transition_graph(d)
print(d, len(t.nodes), "classes,", len(t.edges), "edges, connected:", is_connected(t))

print("graphs per n:", [len(enumerate_graphs(n)) for n in range(8)])
