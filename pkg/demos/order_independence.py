"""
Order independence on a random corpus
=====================================

Activities depend on the order of the hyperedges, the polynomials do not.
We draw a seeded corpus and try every ordering of every instance.
"""

import numpy as np

from hypertutte import build_bipartite, generate_corpus, verify_order_independence

corpus = [build_bipartite(H) for H in generate_corpus(50, seed=1)]
reports = [verify_order_independence(B, "all") for B in corpus]

sizes = np.array([[B.n_vertices, B.n_edges] for B in corpus])
print("vertices per instance: mean %.1f, max %d" % (sizes[:, 0].mean(), sizes[:, 0].max()))
print("hyperedges per instance: mean %.1f, max %d" % (sizes[:, 1].mean(), sizes[:, 1].max()))
print("instances passing:", sum(r.ok for r in reports), "of", len(reports))

# a single instance in detail, with a random sample of orderings instead of all of them
print(verify_order_independence(corpus[0], "random", samples=10, seed=3).render_text())
