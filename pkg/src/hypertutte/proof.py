"""Instance-level replay of the adjacent-transposition argument.

Order ``O`` is ``e_1 < ... < e_h < e_{h+1} < ...`` and ``O'`` swaps ``e_h`` and
``e_{h+1}``. For each hypertree ``f`` the two neighbours

* ``up``   = ``f`` with valence moved from ``e_{h+1}`` to ``e_h``,
* ``down`` = ``f`` with valence moved from ``e_h`` to ``e_{h+1}``,

split the hypertrees into three cases (neither, both, exactly one is a
hypertree). Every intermediate implication is checked on the instance;
implications whose hypothesis fails are counted as vacuous.

Naming in checks: "II"/"IA" internally inactive/active, "EI"/"EA" externally
inactive/active.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .activity import TransferTable, as_ordering, fiber_decomposition
from .errors import HypergraphError
from .hypergraph import BipartiteGraph, hypergraph_to_document
from .hypertrees import as_mapping
from .report import Report

# Activity of (e_h, e_{h+1}) at the fiber endpoints when the swap exchanges
# the two endpoint values. Keys: (hypertree, ordering); values: inactive flags.
INTERNAL_TABLE = {
    ("f", "O"): (False, True),
    ("f*", "O'"): (True, False),
    ("f", "O'"): (False, False),
    ("f*", "O"): (False, False),
}
EXTERNAL_TABLE = {
    ("f", "O"): (False, False),
    ("f*", "O'"): (False, False),
    ("f", "O'"): (True, False),
    ("f*", "O"): (False, True),
}


def swap_adjacent(order: Sequence[str], h: int) -> tuple[str, ...]:
    """Exchange ranks ``h`` and ``h+1`` (1-based)."""
    order = list(order)
    order[h - 1], order[h] = order[h], order[h - 1]
    return tuple(order)


def verify_transposition_proof(B: BipartiteGraph, order: Sequence[str] | str | None, h: int,
                               table: TransferTable | None = None) -> Report:
    order = as_ordering(B, order)
    m = B.n_edges
    if not 1 <= h < m:
        raise HypergraphError(f"rank h={h} out of range 1..{m - 1}")
    table = table or TransferTable.of(B)
    order2 = swap_adjacent(order, h)
    eh, eh1 = order[h - 1], order[h]
    i, j = B.index_of(eh), B.index_of(eh1)
    rest = [k for k in range(m) if k not in (i, j)]

    intO, extO = table.inactive(order)
    intP, extP = table.inactive(order2)
    iO, iP = intO.sum(axis=1), intP.sum(axis=1)
    eO, eP = extO.sum(axis=1), extP.sum(axis=1)
    up = table.valid[:, j, i]
    down = table.valid[:, i, j]
    hts = table.hypertrees
    cases = np.where(up & down, 2, np.where(~up & ~down, 1, 3))

    report = Report("verify transposition")
    base = {
        "command": "verify transposition",
        "hypergraph": hypergraph_to_document(B.to_hypergraph()),
        "order": list(order),
        "h": h,
    }

    def at(n, **extra):
        return lambda: {**base, "hypertree": as_mapping(B, hts[n]), "case": int(cases[n]), **extra}

    def implies(name, hyp, concl, n):
        report.expect(name, bool(concl), at(n), vacuous=not hyp)

    for n in range(len(hts)):
        report.expect("fact 1: E2 activities unchanged",
                      bool((intO[n, rest] == intP[n, rest]).all() and (extO[n, rest] == extP[n, rest]).all()),
                      at(n))
        implies("claim 1 (internal)", intO[n, i], intP[n, i], n)
        implies("claim 1 (external)", extO[n, i], extP[n, i], n)
        implies("claim 2 (internal)", not intO[n, j], not intP[n, j], n)
        implies("claim 2 (external)", not extO[n, j], not extP[n, j], n)
        implies("claim 3 (internal)", up[n] and intO[n, i], intP[n, j], n)
        implies("claim 3 (external)", up[n] and not extO[n, i], not extP[n, j], n)
        implies("claim 4 (i)", not up[n] and intO[n, j], intP[n, j], n)
        implies("claim 4 (ii)", not up[n] and not extO[n, i], not extP[n, i], n)
        implies("claim 5 (i)", down[n] and not intO[n, i], not intP[n, j], n)
        implies("claim 5 (ii)", down[n] and extO[n, i], extP[n, j], n)
        implies("claim 6 (i)", not down[n] and not intO[n, i], not intP[n, i], n)
        implies("claim 6 (ii)", not down[n] and extO[n, j], extP[n, j], n)
        if cases[n] == 1:
            report.expect("case 1: inactivities unchanged", iO[n] == iP[n] and eO[n] == eP[n], at(n))
        elif cases[n] == 2:
            report.expect("case 2: inactivities unchanged", iO[n] == iP[n] and eO[n] == eP[n], at(n))
            report.expect("case 2: e_{h+1} II,EI in O and e_h II,EI in O'",
                          bool(intO[n, j] and extO[n, j] and intP[n, i] and extP[n, i]), at(n))
            report.expect("case 2: e_h in O matches e_{h+1} in O'",
                          bool(intO[n, i] == intP[n, j] and extO[n, i] == extP[n, j]), at(n))

    counts = {str(c): int((cases == c).sum()) for c in (1, 2, 3)}
    report.check("case counts").details.update(counts)

    for fiber in fiber_decomposition(B, eh, eh1, hts):
        idx = [table.index[g] for g in fiber.members]
        fw = lambda n, fiber=fiber: at(n, fiber=[as_mapping(B, g) for g in fiber.members])  # noqa: E731
        report.expect("fiber values consecutive", fiber.is_consecutive, fw(idx[0]))
        if len(idx) == 1:
            report.expect("fiber position matches case", cases[idx[0]] == 1, fw(idx[0]))
        else:
            inner_ok = all(cases[n] == 2 for n in idx[1:-1])
            ends_ok = bool(up[idx[0]] and not down[idx[0]] and down[idx[-1]] and not up[idx[-1]])
            report.expect("fiber position matches case", inner_ok and ends_ok, fw(idx[0]))
            _case3(report, fw, idx[0], idx[-1], i, j, rest, intO, intP, extO, extP, iO, iP, eO, eP)
        report.expect("fiber sum of x^inactivity invariant",
                      sorted(iO[idx]) == sorted(iP[idx]) and sorted(eO[idx]) == sorted(eP[idx]),
                      fw(idx[0]))

    report.expect("interior polynomial unchanged", sorted(iO) == sorted(iP), base)
    report.expect("exterior polynomial unchanged", sorted(eO) == sorted(eP), base)
    return report


def _case3(report, fw, a, b, i, j, rest, intO, intP, extO, extP, iO, iP, eO, eP):
    """Endpoint analysis for a fiber of length >= 2: ``a`` is the member with
    the least value at e_h, ``b`` the greatest."""
    w = fw(a)
    report.expect("case 3: forced inactivities at endpoints",
                  bool(intO[a, j] and extP[a, i] and intP[b, i] and extO[b, j]), w)
    report.expect("case 3: unaffected endpoint activities stable",
                  bool(intO[a, i] == intP[a, i] and extO[a, j] == extP[a, j]
                       and intO[b, j] == intP[b, j] and extO[b, i] == extP[b, i]), w)

    # internal activity: does e_{h+1} stay inactive at f under O'?
    if intP[a, j]:
        report.expect("case 3 internal: equal inactivities branch",
                      iO[a] == iP[a] and iO[b] == iP[b] and bool(intO[b, i]), w)
        report.expect("claim 7", True, w, vacuous=True)
        report.expect("claim 8", True, w, vacuous=True)
        report.expect("table 1", True, w, vacuous=True)
    else:
        report.expect("case 3 internal: equal inactivities branch", True, w, vacuous=True)
        report.expect("claim 7", not (intO[a, i] or intO[b, i] or intP[a, j] or intP[b, j]), w)
        report.expect("claim 8", bool((intO[a, rest] == intO[b, rest]).all()), w)
        got = {("f", "O"): (intO[a, i], intO[a, j]), ("f*", "O'"): (intP[b, i], intP[b, j]),
               ("f", "O'"): (intP[a, i], intP[a, j]), ("f*", "O"): (intO[b, i], intO[b, j])}
        report.expect("table 1", all(tuple(map(bool, got[k])) == v for k, v in INTERNAL_TABLE.items()), w)
        report.expect("case 3 internal: swapped inactivities", iO[a] == iP[b] and iP[a] == iO[b], w)

    # external activity: is e_h externally inactive at f under O?
    if extO[a, i]:
        report.expect("case 3 external: equal inactivities branch",
                      eO[a] == eP[a] and eO[b] == eP[b] and bool(extP[b, j]), w)
        report.expect("claim 7'", True, w, vacuous=True)
        report.expect("claim 8'", True, w, vacuous=True)
        report.expect("table 3", True, w, vacuous=True)
    else:
        report.expect("case 3 external: equal inactivities branch", True, w, vacuous=True)
        report.expect("claim 7'", not (extO[a, i] or extO[b, i] or extP[a, j] or extP[b, j]), w)
        report.expect("claim 8'", bool((extO[a, rest] == extO[b, rest]).all()), w)
        got = {("f", "O"): (extO[a, i], extO[a, j]), ("f*", "O'"): (extP[b, i], extP[b, j]),
               ("f", "O'"): (extP[a, i], extP[a, j]), ("f*", "O"): (extO[b, i], extO[b, j])}
        report.expect("table 3", all(tuple(map(bool, got[k])) == v for k, v in EXTERNAL_TABLE.items()), w)
        report.expect("case 3 external: swapped inactivities", eO[a] == eP[b] and eP[a] == eO[b], w)

    report.expect("case 3: endpoint pairing",
                  sorted((iO[a], iO[b])) == sorted((iP[a], iP[b]))
                  and sorted((eO[a], eO[b])) == sorted((eP[a], eP[b])), w)
