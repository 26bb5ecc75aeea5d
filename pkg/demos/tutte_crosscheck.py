"""
Graphs: comparison with the Tutte polynomial
============================================

For an ordinary graph, I(x) and X(y) are T(x,1) and T(1,y) read backwards.
Two independent Tutte computations (deletion-contraction and spanning-tree
activities) are compared against the hypergraph route.
"""

from hypertutte import Multigraph, crosscheck_specialization, tutte_deletion_contraction

K4 = Multigraph.build("abcd", [(u, v) for k, u in enumerate("abcd") for v in "abcd"[k + 1:]])
T = tutte_deletion_contraction(K4)
print("T(K4) =", T)
print("spanning trees:", T(1, 1))

print(crosscheck_specialization(K4).render_text())

# parallel edges are allowed, they become repeated hyperedges
digon_tail = Multigraph.build("abc", [("a", "b"), ("a", "b"), ("b", "c")])
print("T =", tutte_deletion_contraction(digon_tail))
print(crosscheck_specialization(digon_tail).status)
