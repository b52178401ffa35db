"""
Configurations and their realizations
=====================================

A configuration fixes some edges and non-edges among k vertices and leaves
the rest free. Its realizations are the k-vertex graphs that contain it.
"""

from twoswitch import (
    A4C,
    FIG6,
    Configuration,
    catalog,
    changes_isomorphism_class,
    find_embeddings,
    realizations,
    to_graph6,
)
from twoswitch.configurations import FIG2_A, FIG2_B, FIG2_C, switch_of_embedding

for C in (A4C, FIG2_A, FIG2_B, FIG6, FIG2_C):
    R = realizations(C)
    print(f"{C.name}: {len(R)} realizations", " ".join(to_graph6(g) for g in R[:6]), "..." if len(R) > 6 else "")

# every FIG2_A embedding in P5 marks a class-changing switch
P5 = catalog("P5")
for e in find_embeddings(P5, FIG2_A):
    s = switch_of_embedding(e)
    print(dict(zip(e.config.roles, e.mapping)), s, changes_isomorphism_class(P5, s))

# the unigraph U contains FIG2_A too, but its switch cannot change the class
U = catalog("U")
e = find_embeddings(U, FIG2_A)[0]
print("U:", switch_of_embedding(e), changes_isomorphism_class(U, switch_of_embedding(e)))

# configurations are plain data and round-trip through JSON
custom = Configuration.from_json({"k": 3, "E": [["x", "y"]], "F": [["y", "z"]], "roles": ["x", "y", "z"]})
print(custom.to_json(), len(find_embeddings(P5, custom)))
