"""
Threshold, matrogenic and unigraph classes
==========================================

Each class is recognized by more than one route; the routes are compared
on every call.
"""

from collections import Counter

from twoswitch import catalog, classify, enumerate_graphs, forbidden_family, to_graph6, unigraph_producing

for name in ("K1,4", "C5", "2P3", "U", "4-pan"):
    p = classify(catalog(name))
    print(f"{name:6s} threshold={p.threshold} matrogenic={p.matrogenic} "
          f"hereditary={p.hereditary_unigraph} unigraph={p.unigraph}")

print("witness for U:", classify(catalog("U")).witnesses["hereditary_unigraph"])

# how the classes nest on 6 vertices
tally = Counter()
for G in enumerate_graphs(6):
    p = classify(G)
    tally[(p.threshold, p.matrogenic, p.hereditary_unigraph, p.unigraph)] += 1
for key, count in sorted(tally.items(), reverse=True):
    print(key, count)

print("forbidden family:", " ".join(to_graph6(g) for g in forbidden_family()))
# a set of graphs whose exclusion forces unigraphs
print("{2K2,C4,P4}:", unigraph_producing([catalog(x) for x in ("2K2", "C4", "P4")]))
print("{K3}:", unigraph_producing([catalog("K3")]))
