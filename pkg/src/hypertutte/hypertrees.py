"""Hypertrees of a connected hypergraph.

A hypertree is stored as a tuple of nonnegative integers aligned with
``B.edges`` (document order). Public functions also accept a mapping from
hyperedge id to integer.

Validity has two independent routes:

* :func:`find_realization` / :func:`is_hypertree` search for a spanning tree of
  the incidence graph with prescribed hyperedge degrees;
* :func:`is_hypertree_polymatroid` checks the subset inequalities against
  :func:`~hypertutte.hypergraph.mu` by brute force over all subsets.

Transfer feasibility likewise has a realization route (:func:`transfer_valid`)
and a tight-set route (:func:`transfer_valid_by_tightness`).
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

import numpy as np

from .errors import BudgetExceeded, DisconnectedError, DomainMismatchError, HypergraphError
from .hypergraph import BipartiteGraph, _DSU, _mu_indices, mu_table

Hypertree = tuple[int, ...]
HypertreeLike = Union[Mapping[str, int], Sequence[int]]
Witness = frozenset[tuple[str, str]]

EXHAUSTIVE_BOUND = 20
DEFAULT_STATE_BUDGET = 2_000_000


class TransferMove(NamedTuple):
    source: str
    target: str


def as_vector(B: BipartiteGraph, f: HypertreeLike) -> Hypertree:
    """Normalize ``f`` to a tuple in document order."""
    if isinstance(f, Mapping):
        if set(f) != set(B.edges):
            raise DomainMismatchError(
                f"hypertree domain {sorted(f)} does not match hyperedges {sorted(B.edges)}"
            )
        vec = tuple(f[e] for e in B.edges)
    else:
        vec = tuple(f)
        if len(vec) != B.n_edges:
            raise DomainMismatchError(f"expected {B.n_edges} values, got {len(vec)}")
    for x in vec:
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise HypergraphError(f"hypertree values must be integers, got {x!r}")
    return tuple(int(x) for x in vec)


def as_mapping(B: BipartiteGraph, f: HypertreeLike) -> dict[str, int]:
    """Hypertree document: hyperedge id to value, sorted by id."""
    vec = as_vector(B, f)
    return {e: vec[i] for i, e in sorted(enumerate(B.edges), key=lambda p: p[1])}


def _in_box(B: BipartiteGraph, f: Hypertree) -> bool:
    return all(0 <= x <= d - 1 for x, d in zip(f, B.degrees)) and sum(f) == B.n_vertices - 1


# -- realization route -------------------------------------------------------

def _canon(labels) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


def find_realization(B: BipartiteGraph, f: HypertreeLike) -> Witness | None:
    """A spanning tree of ``B`` in which hyperedge ``e`` has degree ``f(e)+1``.

    Hyperedges are processed in document order; each picks ``f(e)+1`` of its
    vertices (lexicographically) lying in pairwise distinct components of the
    forest built so far. Failed states, keyed by the induced partition of the
    vertex set, are memoized, so the search is bounded by the number of
    partitions per level. Returns ``None`` when no such tree exists.
    """
    f = as_vector(B, f)
    memo = B._memo.setdefault("realization", {})
    if f in memo:
        return memo[f]
    witness = _realize(B, f) if _in_box(B, f) else None
    memo[f] = witness
    return witness


def _realize(B: BipartiteGraph, f: Hypertree) -> Witness | None:
    n, m = B.n_vertices, B.n_edges
    members = B.members
    last_use = [-1] * n
    for i, ms in enumerate(members):
        for v in ms:
            last_use[v] = i
    if n == 0 or (n + m > 1 and min(last_use) < 0):
        return None
    failed: set[tuple[int, tuple[int, ...]]] = set()
    chosen: list[tuple[int, tuple[int, ...]]] = []

    def alive_ok(i: int, labels: tuple[int, ...]) -> bool:
        # every vertex class must still be reachable from an unprocessed hyperedge
        ncls = max(labels) + 1
        if ncls == 1:
            return True
        reach = [False] * ncls
        for v in range(n):
            if last_use[v] > i:
                reach[labels[v]] = True
        if not all(reach):
            return False
        for j in range(i + 1, m):
            if len({labels[v] for v in members[j]}) < f[j] + 1:
                return False
        return True

    def search(i: int, labels: tuple[int, ...]) -> bool:
        if i == m:
            return max(labels) == 0
        key = (i, labels)
        if key in failed:
            return False
        need = f[i] + 1
        for pick in combinations(members[i], need):
            cls = {labels[v] for v in pick}
            if len(cls) != need:
                continue
            target = min(cls)
            merged = _canon(target if x in cls else x for x in labels)
            if not alive_ok(i, merged):
                continue
            chosen.append((i, pick))
            if search(i + 1, merged):
                return True
            chosen.pop()
        failed.add(key)
        return False

    if not search(0, tuple(range(n))):
        return None
    return frozenset((B.vertices[v], B.edges[i]) for i, pick in chosen for v in pick)


def is_hypertree(B: BipartiteGraph, f: HypertreeLike) -> bool:
    return find_realization(B, f) is not None


def check_witness(B: BipartiteGraph, witness: Iterable[tuple[str, str]], f: HypertreeLike) -> bool:
    """Re-validate a witness independently of the search that produced it."""
    try:
        return hypertree_from_tree(B, witness) == as_vector(B, f)
    except HypergraphError:
        return False


def hypertree_from_tree(B: BipartiteGraph, tau: Iterable[tuple[str, str]]) -> Hypertree:
    """Degree vector ``d_tau(e) - 1`` of a spanning tree of ``B``."""
    n, m = B.n_vertices, B.n_edges
    edges = set()
    for v, e in tau:
        i, vi = B.index_of(e), B.vertex_index.get(v)
        if vi is None or vi not in B.members[i]:
            raise HypergraphError(f"({v!r}, {e!r}) is not an edge of the incidence graph")
        edges.add((vi, i))
    if len(edges) != n + m - 1:
        raise HypergraphError(f"not a spanning tree: {len(edges)} edges for {n + m} nodes")
    dsu = _DSU(n + m)
    deg = [0] * m
    for vi, i in edges:
        if not dsu.union(vi, n + i):
            raise HypergraphError("not a spanning tree: contains a cycle")
        deg[i] += 1
    return tuple(d - 1 for d in deg)


# -- enumeration -------------------------------------------------------------

def enumerate_hypertrees(B: BipartiteGraph, budget: int = DEFAULT_STATE_BUDGET) -> list[Hypertree]:
    """All hypertrees, sorted lexicographically in document order.

    Spanning trees of ``B`` are explored by contraction/deletion over the
    incidence edges in a fixed order; a subproblem is determined by the
    position in that order and the current partition of the nodes, so each
    subproblem is solved once and returns the set of degree vectors it can
    contribute. Edges whose deletion would disconnect the rest are forced.
    ``budget`` caps the number of distinct subproblems.
    """
    key = ("hypertrees", budget)
    if key in B._memo:
        return B._memo[key]
    n, m = B.n_vertices, B.n_edges
    N = n + m
    inc = [(v, n + i, i) for i, ms in enumerate(B.members) for v in ms]
    last = [-1] * N
    for k, (a, b, _) in enumerate(inc):
        last[a] = last[b] = k
    # nodes with an incidence at position >= k; only these matter for the future
    live = [[x for x in range(N) if last[x] >= k] for k in range(len(inc) + 1)]
    zero = (0,) * m
    units = [tuple(int(j == i) for j in range(m)) for i in range(m)]
    memo: dict[tuple[int, tuple[int, ...]], frozenset[Hypertree]] = {}

    def connected_from(k: int, labels: tuple[int, ...]) -> bool:
        ncls = max(labels) + 1
        dsu = _DSU(ncls)
        left = ncls - 1
        for a, b, _ in inc[k:]:
            if dsu.union(labels[a], labels[b]):
                left -= 1
                if left == 0:
                    return True
        return left == 0

    def rec(k: int, labels: tuple[int, ...]) -> frozenset[Hypertree]:
        if max(labels) == 0:
            return frozenset((zero,))
        state = (k, _canon(labels[x] for x in live[k]))
        hit = memo.get(state)
        if hit is not None:
            return hit
        if len(memo) >= budget:
            raise BudgetExceeded(f"hypertree enumeration exceeded {budget} subproblems")
        a, b, owner = inc[k]
        la, lb = labels[a], labels[b]
        if la == lb:
            out = rec(k + 1, labels)
        else:
            lo, hi = min(la, lb), max(la, lb)
            merged = _canon(lo if x == hi else x for x in labels)
            u = units[owner]
            out = frozenset(tuple(p + q for p, q in zip(vec, u)) for vec in rec(k + 1, merged))
            if connected_from(k + 1, labels):
                out = out | rec(k + 1, labels)
        memo[state] = out
        return out

    start = tuple(range(N))
    if N == 0 or not connected_from(0, start):
        raise DisconnectedError("incidence graph is not connected")
    # tree degree of hyperedge e is f(e) + 1
    result = sorted(tuple(d - 1 for d in vec) for vec in rec(0, start))
    B._memo[key] = result
    return result


def transfer_valid(B: BipartiteGraph, f: HypertreeLike, move: tuple[str, str]) -> bool:
    """Whether moving one unit of valence from ``move[0]`` to ``move[1]``
    leaves a hypertree. ``f`` is assumed to be a hypertree."""
    f = as_vector(B, f)
    src, dst = _move_indices(B, move)
    if f[src] < 1:
        return False
    g = list(f)
    g[src] -= 1
    g[dst] += 1
    return is_hypertree(B, tuple(g))


def _move_indices(B: BipartiteGraph, move: tuple[str, str]) -> tuple[int, int]:
    src, dst = B.index_of(move[0]), B.index_of(move[1])
    if src == dst:
        raise HypergraphError(f"transfer endpoints must differ, got {move[0]!r} twice")
    return src, dst


def enumerate_hypertrees_by_transfer(B: BipartiteGraph, seed: HypertreeLike) -> list[Hypertree]:
    """Closure of ``{seed}`` under single valence transfers, sorted."""
    seed = as_vector(B, seed)
    if not is_hypertree(B, seed):
        raise HypergraphError(f"invalid seed: {seed} is not a hypertree")
    m = B.n_edges
    adj = B._memo.setdefault("transfer_adj", {})
    seen = {seed}
    queue = deque([seed])
    while queue:
        f = queue.popleft()
        nbrs = adj.get(f)
        if nbrs is None:
            nbrs = []
            for s in range(m):
                if f[s] == 0:
                    continue
                for t in range(m):
                    if t == s:
                        continue
                    g = list(f)
                    g[s] -= 1
                    g[t] += 1
                    g = tuple(g)
                    if is_hypertree(B, g):
                        nbrs.append(g)
            adj[f] = nbrs
        for g in nbrs:
            if g not in seen:
                seen.add(g)
                queue.append(g)
    return sorted(seen)


# -- subset route ------------------------------------------------------------

def _check_bound(B: BipartiteGraph, bound: int) -> None:
    if B.n_edges > bound:
        raise BudgetExceeded(
            f"{B.n_edges} hyperedges exceeds the exhaustive bound {bound}; use is_hypertree"
        )


def _mu_array(B: BipartiteGraph) -> np.ndarray:
    arr = B._memo.get("mu_array")
    if arr is None:
        arr = B._memo["mu_array"] = np.asarray(mu_table(B), dtype=np.int64)
    return arr


def subset_sums(f: Sequence[int]) -> np.ndarray:
    """``sums[mask] = sum(f[i] for bits i of mask)``."""
    m = len(f)
    sums = np.zeros(1 << m, dtype=np.int64)
    for i, x in enumerate(f):
        sums.reshape(-1, 2, 1 << i)[:, 1, :] += x
    return sums


def is_hypertree_polymatroid(B: BipartiteGraph, f: HypertreeLike, bound: int = EXHAUSTIVE_BOUND) -> bool:
    """``f >= 0``, ``sum f = |V| - 1`` and ``sum_S f <= mu(S)`` for all nonempty ``S``."""
    _check_bound(B, bound)
    f = as_vector(B, f)
    if any(x < 0 for x in f) or sum(f) != B.n_vertices - 1:
        return False
    return bool(np.all(subset_sums(f) <= _mu_array(B)))


def _mask(B: BipartiteGraph, S: Iterable[str]) -> int:
    mask = 0
    for e in S:
        mask |= 1 << B.index_of(e)
    return mask


def _ids(B: BipartiteGraph, mask: int) -> frozenset[str]:
    return frozenset(e for i, e in enumerate(B.edges) if mask >> i & 1)


def is_tight(B: BipartiteGraph, f: HypertreeLike, S: Iterable[str]) -> bool:
    f = as_vector(B, f)
    mask = _mask(B, S)
    idx = [i for i in range(B.n_edges) if mask >> i & 1]
    return sum(f[i] for i in idx) == _mu_indices(B, idx)


def tight_masks(B: BipartiteGraph, f: HypertreeLike, bound: int = EXHAUSTIVE_BOUND) -> np.ndarray:
    """Bitmasks of all subsets tight at ``f``, ascending."""
    _check_bound(B, bound)
    f = as_vector(B, f)
    memo = B._memo.setdefault("tight", {})
    if f not in memo:
        memo[f] = np.flatnonzero(subset_sums(f) == _mu_array(B))
    return memo[f]


def _subset_key(B: BipartiteGraph, mask: int):
    idx = [i for i in range(B.n_edges) if mask >> i & 1]
    return (len(idx), idx)


def tight_family(B: BipartiteGraph, f: HypertreeLike, bound: int = EXHAUSTIVE_BOUND) -> list[frozenset[str]]:
    """All subsets tight at ``f``, by size then document position."""
    masks = sorted((int(x) for x in tight_masks(B, f, bound)), key=lambda k: _subset_key(B, k))
    return [_ids(B, k) for k in masks]


def transfer_valid_by_tightness(B: BipartiteGraph, f: HypertreeLike, move: tuple[str, str],
                                bound: int = EXHAUSTIVE_BOUND) -> bool:
    """``f(source) > 0`` and no tight set contains ``target`` but not ``source``."""
    f = as_vector(B, f)
    src, dst = _move_indices(B, move)
    if f[src] == 0:
        return False
    masks = tight_masks(B, f, bound)
    blocking = ((masks >> dst) & 1 == 1) & ((masks >> src) & 1 == 0)
    return not bool(blocking.any())


def candidate_maps(B: BipartiteGraph) -> list[Hypertree]:
    """Every ``f`` with ``0 <= f(e) <= d(e) - 1`` and ``sum f = |V| - 1``."""
    target = B.n_vertices - 1
    caps = [d - 1 for d in B.degrees]
    out: list[Hypertree] = []
    suffix = [0] * (len(caps) + 1)
    for i in range(len(caps) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]

    def rec(i: int, left: int, acc: list[int]):
        if i == len(caps):
            if left == 0:
                out.append(tuple(acc))
            return
        for x in range(min(caps[i], left), -1, -1):
            if left - x <= suffix[i + 1]:
                acc.append(x)
                rec(i + 1, left - x, acc)
                acc.pop()

    if target >= 0:
        rec(0, target, [])
    return sorted(out)
