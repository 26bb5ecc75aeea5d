"""Exhaustive property checks for the structural facts behind hypertrees.

Each check is evaluated on every relevant instance (hypertree, subset, move,
pair of hypertrees, ordering) of a single small hypergraph. Implications whose
hypothesis fails are counted as vacuous.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

import numpy as np

from .activity import TransferTable, as_ordering, random_orderings
from .errors import BudgetExceeded, HypergraphError
from .hypergraph import BipartiteGraph, hypergraph_to_document
from .hypertrees import (
    EXHAUSTIVE_BOUND,
    _mu_array,
    as_mapping,
    candidate_maps,
    check_witness,
    enumerate_hypertrees_by_transfer,
    find_realization,
    is_hypertree,
    is_hypertree_polymatroid,
    subset_sums,
    tight_masks,
    transfer_valid,
    transfer_valid_by_tightness,
)
from .report import Report

LEMMA_CHECKS = (
    "mu monotone",
    "mu submodular",
    "mu of E is |V|-1",
    "witness soundness",
    "checker equivalence",
    "hypertrees lie in the box",
    "dominance sufficiency",
    "transfer checker equivalence",
    "transfer transitivity",
    "tight-set lattice closure",
    "slack implies inflow",
    "pair shift (1): e2->e at f1 implies e1->e at f2",
    "pair shift (2): e->e1 at f1 implies e->e2 at f2",
    "pair block (1): e,e2 blocked into e' at f1 stays blocked at f2",
    "pair block (2): e blocked into e1,e' at f1 stays blocked at f2",
    "activity stability above both",
    "superset monotonicity",
    "exchange connectivity",
)


def _subsets(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def hypertree_pairs(hypertrees: Sequence[tuple[int, ...]]):
    """Index pairs ``(a, b, i, j)`` with ``f_a(i) < f_b(i)`` and ``f_a = f_b``
    off ``{i, j}`` (so ``f_a(j) > f_b(j)``)."""
    m = len(hypertrees[0]) if hypertrees else 0
    out = []
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            groups: dict[tuple, list[int]] = {}
            for n, f in enumerate(hypertrees):
                rest = tuple(x for k, x in enumerate(f) if k != i and k != j)
                groups.setdefault(rest, []).append(n)
            for members in groups.values():
                for a in members:
                    for b in members:
                        if hypertrees[a][i] < hypertrees[b][i]:
                            out.append((a, b, i, j))
    return out


def verify_lemmas(B: BipartiteGraph, orderings: str = "all", samples: int = 20, seed: int = 0,
                  max_edges: int = 6, table: TransferTable | None = None,
                  bound: int = EXHAUSTIVE_BOUND,
                  order_list: Sequence[Sequence[str]] | None = None) -> Report:
    """Run every structural check on ``B``.

    Activity stability quantifies over orderings: all of them when
    ``orderings="all"`` (at most ``max_edges`` hyperedges), otherwise
    ``samples`` seeded random ones. ``order_list`` overrides both.
    """
    if B.n_edges > bound:
        raise BudgetExceeded(f"{B.n_edges} hyperedges exceeds the exhaustive bound {bound}")
    table = table or TransferTable.of(B)
    hts = table.hypertrees
    valid = table.valid
    m, n = B.n_edges, B.n_vertices
    full = (1 << m) - 1
    mu = _mu_array(B)
    if orderings not in ("all", "random"):
        raise HypergraphError(f"unknown orderings mode {orderings!r}")
    report = Report("verify lemmas", seed=seed if orderings == "random" and order_list is None else None)
    doc = hypergraph_to_document(B.to_hypergraph())

    def wit(**extra):
        return {"command": "verify lemmas", "hypergraph": doc, **extra}

    def ids(mask):
        return [e for k, e in enumerate(B.edges) if mask >> k & 1]

    def fdoc(a):
        return as_mapping(B, hts[a])

    for check in LEMMA_CHECKS:
        report.check(check)

    # rank function
    for S in range(1 << m):
        for k in range(m):
            if not S >> k & 1:
                T = S | 1 << k
                report.expect("mu monotone", mu[S] <= mu[T], lambda S=S, T=T: wit(subsets=[ids(S), ids(T)]))
                for k2 in range(k + 1, m):
                    if not S >> k2 & 1:
                        U, W = S | 1 << k2, T | 1 << k2
                        report.expect("mu submodular", mu[T] + mu[U] >= mu[W] + mu[S],
                                      lambda S=S, k=k, k2=k2: wit(base=ids(S), added=[B.edges[k], B.edges[k2]]))
    report.expect("mu of E is |V|-1", mu[full] == n - 1, wit())

    # validity: two checkers, witnesses, the box and dominance
    known = set(hts)
    for a, f in enumerate(hts):
        w = find_realization(B, f)
        report.expect("witness soundness", w is not None and check_witness(B, w, f),
                      lambda a=a: wit(hypertree=fdoc(a)))
    box = candidate_maps(B)
    box_set = set(box)
    report.expect("hypertrees lie in the box", known <= box_set,
                  lambda: wit(outside=[as_mapping(B, f) for f in sorted(known - box_set)]))
    best = np.max(np.stack([subset_sums(f) for f in hts]), axis=0)
    for g in box:
        by_tree = is_hypertree(B, g)
        by_subsets = is_hypertree_polymatroid(B, g, bound)
        report.expect("checker equivalence", by_tree == by_subsets == (g in known),
                      lambda g=g, t=by_tree, s=by_subsets: wit(map=as_mapping(B, g), realization=t,
                                                             subsets=s))
        dominated = bool(np.all(subset_sums(g)[1:] <= best[1:]))
        report.expect("dominance sufficiency", by_tree, lambda g=g: wit(map=as_mapping(B, g)),
                      vacuous=not dominated)

    # transfers
    for a, f in enumerate(hts):
        for s in range(m):
            for t in range(m):
                if s == t:
                    continue
                move = (B.edges[s], B.edges[t])
                r = transfer_valid(B, f, move)
                q = transfer_valid_by_tightness(B, f, move, bound)
                report.expect("transfer checker equivalence", r == q == bool(valid[a, s, t]),
                              lambda a=a, move=move, r=r, q=q: wit(hypertree=fdoc(a), move=list(move),
                                                                   realization=r, tightness=q))

    for a in range(len(hts)):
        V = valid[a]
        for e1 in range(m):
            for e2 in range(m):
                for e3 in range(m):
                    if len({e1, e2, e3}) < 3:
                        continue
                    hyp = bool(V[e1, e2] and V[e2, e3])
                    report.expect("transfer transitivity", bool(V[e1, e3]),
                                  lambda a=a, e1=e1, e2=e2, e3=e3: wit(
                                      hypertree=fdoc(a), chain=[B.edges[e1], B.edges[e2], B.edges[e3]]),
                                  vacuous=not hyp)

    # tight sets
    for a, f in enumerate(hts):
        tight = np.zeros(1 << m, dtype=bool)
        masks = [int(x) for x in tight_masks(B, f, bound)]
        tight[masks] = True
        for x in masks:
            for y in masks:
                if x < y:
                    report.expect("tight-set lattice closure", bool(tight[x & y] and tight[x | y]),
                                  lambda a=a, x=x, y=y: wit(hypertree=fdoc(a), tight=[ids(x), ids(y)]))
        V = valid[a]
        for S in range(1, full):
            inside = [k for k in range(m) if S >> k & 1]
            outside = [k for k in range(m) if not S >> k & 1]
            inflow = bool(V[np.ix_(outside, inside)].any())
            report.expect("slack implies inflow", inflow, lambda a=a, S=S: wit(hypertree=fdoc(a), subset=ids(S)),
                          vacuous=bool(tight[S]))
        for S in range(1, full + 1):
            for T in _subsets(full & ~S):
                big = S | T
                src = [k for k in range(m) if S >> k & 1]
                dst = [k for k in range(m) if big >> k & 1]
                for e in range(m):
                    receive_small = bool(V[e, src].any())
                    send_small = bool(V[src, e].any())
                    report.expect("superset monotonicity",
                                  (not receive_small or bool(V[e, dst].any()))
                                  and (not send_small or bool(V[dst, e].any())),
                                  lambda a=a, S=S, big=big, e=e: wit(hypertree=fdoc(a), subset=ids(S),
                                                                     superset=ids(big), edge=B.edges[e]),
                                  vacuous=not (receive_small or send_small))

    # pairs of hypertrees differing on two hyperedges
    pairs = hypertree_pairs(hts)
    for a, b, i, j in pairs:
        P, Q = valid[a], valid[b]

        def pw(a=a, b=b, i=i, j=j, **extra):
            return lambda: wit(f1=fdoc(a), f2=fdoc(b), e1=B.edges[i], e2=B.edges[j],
                               **{k: B.edges[v] for k, v in extra.items()})

        others = [k for k in range(m) if k != i and k != j]
        for e in others:
            report.expect("pair shift (1): e2->e at f1 implies e1->e at f2", bool(Q[i, e]), pw(e=e),
                          vacuous=not P[j, e])
            report.expect("pair shift (2): e->e1 at f1 implies e->e2 at f2", bool(Q[e, j]), pw(e=e),
                          vacuous=not P[e, i])
            for e2 in others:
                if e2 == e:
                    continue
                report.expect("pair block (1): e,e2 blocked into e' at f1 stays blocked at f2",
                              not (Q[e, e2] or Q[j, e2]), pw(e=e, e_prime=e2),
                              vacuous=bool(P[e, e2] or P[j, e2]))
                report.expect("pair block (2): e blocked into e1,e' at f1 stays blocked at f2",
                              not (Q[e, i] or Q[e, e2]), pw(e=e, e_prime=e2),
                              vacuous=bool(P[e, i] or P[e, e2]))

    if order_list is not None:
        orders = [as_ordering(B, o) for o in order_list]
    elif orderings == "all":
        if m > max_edges:
            raise BudgetExceeded(f"all orderings of {m} hyperedges exceeds the budget (max {max_edges})")
        orders = list(permutations(B.edges))
    else:
        orders = random_orderings(B.edges, samples, seed)
    if pairs:
        A = np.array([p[0] for p in pairs])
        Bi = np.array([p[1] for p in pairs])
        I = np.array([p[2] for p in pairs])
        J = np.array([p[3] for p in pairs])
        for order in orders:
            order = as_ordering(B, order)
            rank = np.empty(m, dtype=np.int64)
            for pos, e in enumerate(order):
                rank[B.index_of(e)] = pos
            intl, ext = table.inactive(order)
            above = rank[None, :] > np.maximum(rank[I], rank[J])[:, None]
            same = (intl[A] == intl[Bi]) & (ext[A] == ext[Bi])
            bad = above & ~same
            c = report.check("activity stability above both")
            c.vacuous += int((~above).sum())
            c.passed += int((above & same).sum())
            if bad.any():
                p, e = map(int, np.argwhere(bad)[0])
                a, b, i, j = pairs[p]
                report.fail(c, wit(f1=fdoc(a), f2=fdoc(b), e1=B.edges[i], e2=B.edges[j],
                                   edge=B.edges[e], order=list(order)))
                c.failed += int(bad.sum()) - 1
        report.check("activity stability above both").details["orderings"] = len(orders)

    full_set = sorted(hts)
    for a, f in enumerate(hts):
        reached = enumerate_hypertrees_by_transfer(B, f)
        report.expect("exchange connectivity", reached == full_set,
                      lambda a=a: wit(seed_hypertree=fdoc(a)))
    report.check("exchange connectivity").details["hypertrees"] = len(hts)
    return report
