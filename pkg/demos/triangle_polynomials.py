"""
Interior and exterior polynomials of a triangle
===============================================

The triangle, viewed as a hypergraph with three 2-element hyperedges, has
three hypertrees. We list them, look at the activities of each one under a
fixed order, and sum the inactivities into I(x) and X(y).
"""

from itertools import permutations

from hypertutte import (Hypergraph, TransferTable, activity_profile, build_bipartite,
                        exterior_polynomial, interior_polynomial)

H = Hypergraph.build(["v1", "v2", "v3"], {"a": ["v1", "v2"], "b": ["v2", "v3"], "c": ["v1", "v3"]})
B = build_bipartite(H)

# each hypertree assigns f(e) = (degree of e in a spanning tree of B) - 1
table = TransferTable.of(B)
for f in table.hypertrees:
    p = activity_profile(B, f, "a,b,c")
    print(dict(zip(B.edges, f)), "internal inactivity", p.internal_inactivity,
          "external inactivity", p.external_inactivity)

print("I(x) =", interior_polynomial(B, "a,b,c").format("x"))
print("X(y) =", exterior_polynomial(B, "a,b,c").format("y"))

# the same pair of polynomials comes out of every ordering
print({table.polynomials(o) for o in permutations(B.edges)})
