"""
Exhaustive checks and negative controls
=======================================

Every claim is checked on all graphs (or degree sequences) up to a bound.
A negative control corrupts one definition and must produce counterexamples.
"""

import sys

from twoswitch import CLAIMS, negative_control, verify

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 6

for claim in CLAIMS:
    print(verify(claim, max_n).summary())

print()
for claim in CLAIMS:
    defs = negative_control(claim)
    rep = verify(claim, max_n, defs=defs)
    first = rep.counterexamples[0] if rep.counterexamples else None
    print(f"{claim} with {defs.label}: {len(rep.counterexamples)} counterexamples", first and first.graph6)
