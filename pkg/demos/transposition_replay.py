"""
Replaying the adjacent-transposition argument
=============================================

Swapping two neighbouring hyperedges e_h, e_{h+1} in the order changes the
activities of some hypertrees but never the totals. The checker sorts each
hypertree into one of three cases (by which of the two transfers between the
swapped edges is valid) and tests every intermediate claim separately.
"""

from hypertutte import (Hypergraph, TransferTable, build_bipartite, fiber_decomposition,
                        verify_transposition_proof)

H = Hypergraph.build(
    ["u", "v", "w", "x"],
    {"p": ["u", "v", "w"], "q": ["v", "w"], "r": ["w", "x"], "s": ["u", "x"]},
)
B = build_bipartite(H)
table = TransferTable.of(B)
print(len(table), "hypertrees")

report = verify_transposition_proof(B, "p,q,r,s", 2, table)
print(report.render_text())

# fibers: hypertrees that agree away from the swapped pair form runs of consecutive values
for fiber in fiber_decomposition(B, "q", "r", table.hypertrees):
    print(fiber.values, "consecutive" if fiber.is_consecutive else "GAP")
