"""Tutte polynomials of loopless multigraphs, computed two ways, and the
specialization check against the interior and exterior polynomials."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .activity import IntPolynomial, TransferTable
from .errors import DomainMismatchError, LoopError
from .hypergraph import (
    Multigraph,
    _DSU,
    build_bipartite,
    graph_to_document,
    graph_to_hypergraph,
)
from .report import Report


@dataclass(frozen=True)
class TuttePolynomial:
    """``coeffs[(i, j)]`` is the coefficient of ``x^i y^j``; zeros are dropped."""

    coeffs: Mapping[tuple[int, int], int]

    def __post_init__(self):
        clean = {(int(i), int(j)): int(c) for (i, j), c in sorted(self.coeffs.items()) if c}
        object.__setattr__(self, "coeffs", clean)

    def __eq__(self, other):
        return isinstance(other, TuttePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def at_y_one(self) -> IntPolynomial:
        """Coefficients of ``T(x, 1)``."""
        out = Counter()
        for (i, _), c in self.coeffs.items():
            out[i] += c
        return IntPolynomial(tuple(out[k] for k in range(max(out, default=-1) + 1)))

    def at_x_one(self) -> IntPolynomial:
        """Coefficients of ``T(1, y)``."""
        out = Counter()
        for (_, j), c in self.coeffs.items():
            out[j] += c
        return IntPolynomial(tuple(out[k] for k in range(max(out, default=-1) + 1)))

    def to_document(self) -> dict:
        return {"coeffs": [[i, j, c] for (i, j), c in self.coeffs.items()]}

    def __str__(self):
        terms = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda t: (-t[0][0] - t[0][1], -t[0][0])):
            mono = "".join(p for p in (_pow("x", i), _pow("y", j)) if p)
            terms.append(str(c) if not mono else mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"


def _pow(var: str, k: int) -> str:
    return "" if k == 0 else var if k == 1 else f"{var}^{k}"


def _add(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, 0) + c
    return out


def _shift(p: dict, di: int, dj: int) -> dict:
    return {(i + di, j + dj): c for (i, j), c in p.items()}


# -- deletion / contraction --------------------------------------------------

def _components(n: int, edges) -> int:
    dsu = _DSU(n)
    comps = n
    for a, b in edges:
        if dsu.union(a, b):
            comps -= 1
    return comps


def _canonical(n: int, edges: tuple[tuple[int, int], ...]) -> tuple:
    """Memo key: the edge multiset after relabeling vertices by refined colors.

    Colour refinement starts from degrees and iterates on neighbour colour
    multisets. When the final colours are all distinct the relabeling is
    canonical; otherwise the current labels are kept, which is still a valid
    (just less shareable) key.
    """
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    colors = [len(x) for x in adj]
    for _ in range(n):
        sig = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        palette = {s: k for k, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    if len(set(colors)) == n:
        relabel = colors
        tag = "canon"
    else:
        relabel = list(range(n))
        tag = "raw"
    return (tag, n, tuple(sorted(tuple(sorted((relabel[a], relabel[b]))) for a, b in edges)))


def _contract(n: int, edges, k: int):
    a, b = edges[k]
    lo, hi = min(a, b), max(a, b)

    def f(v):
        v = lo if v == hi else v
        return v - 1 if v > hi else v

    return n - 1, tuple((f(x), f(y)) for t, (x, y) in enumerate(edges) if t != k)


def tutte_deletion_contraction(G: Multigraph) -> TuttePolynomial:
    """``T(G) = T(G - e) + T(G / e)``, with ``x`` per bridge and ``y`` per loop."""
    index = {v: i for i, v in enumerate(G.vertices)}
    for eid, a, b in G.edges:
        if a == b:
            raise LoopError(f"loop not representable: edge {eid!r} at {a!r}")
    edges = tuple((index[a], index[b]) for _, a, b in G.edges)
    memo: dict[tuple, dict] = {}

    def rec(n: int, edges: tuple) -> dict:
        loops = sum(1 for a, b in edges if a == b)
        if loops:
            return _shift(rec(n, tuple(e for e in edges if e[0] != e[1])), 0, loops)
        if not edges:
            return {(0, 0): 1}
        key = _canonical(n, edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        k = 0
        rest = edges[1:]
        contracted = rec(*_contract(n, edges, k))
        if _components(n, rest) > _components(n, edges):
            out = _shift(contracted, 1, 0)
        else:
            out = _add(rec(n, rest), contracted)
        memo[key] = out
        return out

    return TuttePolynomial(rec(len(G.vertices), edges))


# -- spanning-tree activities ------------------------------------------------

def spanning_trees(G: Multigraph) -> list[tuple[str, ...]]:
    """Spanning trees as sorted tuples of edge ids (brute force)."""
    index = {v: i for i, v in enumerate(G.vertices)}
    n = len(G.vertices)
    out = []
    for combo in combinations(G.edges, n - 1):
        dsu = _DSU(n)
        if all(dsu.union(index[a], index[b]) for _, a, b in combo):
            out.append(tuple(sorted(e for e, _, _ in combo)))
    return sorted(out)


def tutte_by_activities(G: Multigraph, order: Sequence[str] | str | None = None) -> TuttePolynomial:
    """Sum over spanning trees of ``x^(internal activity) y^(external activity)``.

    A tree edge is internally active when it is the smallest edge of its
    fundamental cut; a non-tree edge is externally active when it is the
    smallest edge of its fundamental cycle.
    """
    ids = [e for e, _, _ in G.edges]
    if order is None:
        order = ids
    elif isinstance(order, str):
        order = [x.strip() for x in order.split(",") if x.strip()]
    if sorted(order) != sorted(ids):
        raise DomainMismatchError(f"ordering {list(order)} is not a permutation of {ids}")
    rank = {e: k for k, e in enumerate(order)}
    index = {v: i for i, v in enumerate(G.vertices)}
    ends = {e: (index[a], index[b]) for e, a, b in G.edges}
    n = len(G.vertices)
    total: Counter = Counter()
    for tree in spanning_trees(G):
        tree_set = set(tree)
        internal = external = 0
        for e in tree:
            # cut: edges reconnecting the two sides of T - e
            dsu = _DSU(n)
            for t in tree:
                if t != e:
                    dsu.union(*ends[t])
            cut = [g for g in ids if dsu.find(ends[g][0]) != dsu.find(ends[g][1])]
            internal += min(cut, key=rank.__getitem__) == e
        for g in ids:
            if g in tree_set:
                continue
            # cycle: g plus the tree path between its ends; t is on it iff T - t + g is a tree
            cycle = [g]
            for t in tree:
                dsu = _DSU(n)
                for s in tree:
                    if s != t:
                        dsu.union(*ends[s])
                if dsu.find(ends[g][0]) != dsu.find(ends[g][1]):
                    cycle.append(t)
            external += min(cycle, key=rank.__getitem__) == g
        total[(internal, external)] += 1
    return TuttePolynomial(dict(total))


# -- specialization ----------------------------------------------------------

def reversed_in_degree(p: IntPolynomial, degree: int) -> IntPolynomial:
    """``t^degree p(1/t)``; requires ``deg p <= degree``."""
    c = list(p.coefficients) + [0] * (degree + 1 - len(p.coefficients))
    if len(c) > degree + 1:
        raise ValueError(f"degree {p.degree} exceeds {degree}")
    return IntPolynomial(tuple(reversed(c)))


def crosscheck_specialization(G: Multigraph, order: Sequence[str] | None = None) -> Report:
    """Compare ``I``/``X`` of the graph's hypergraph with ``T(x,1)``/``T(1,y)``.

    Checks ``I(x) = x^(|V|-1) T(1/x, 1)`` and ``X(y) = y^(|E|-|V|+1) T(1, 1/y)``
    and that both Tutte computations agree.
    """
    H = graph_to_hypergraph(G)
    B = build_bipartite(H)
    table = TransferTable.of(B)
    I, X = table.polynomials(order)
    dc = tutte_deletion_contraction(G)
    act = tutte_by_activities(G, order)
    nv, ne = len(G.vertices), len(G.edges)
    report = Report("crosscheck-tutte")
    base = {"command": "crosscheck-tutte", "graph": graph_to_document(G)}
    if order is not None:
        base["order"] = list(order)
    report.expect("deletion-contraction equals activities", dc == act,
                  lambda: {**base, "deletion_contraction": dc.to_document(), "activities": act.to_document()})
    tx, ty = dc.at_y_one(), dc.at_x_one()
    for name, poly, special, degree in (("interior", I, tx, nv - 1), ("exterior", X, ty, ne - nv + 1)):
        try:
            want = reversed_in_degree(special, degree)
        except ValueError:
            want = None
        c = report.check(f"{name} equals reversed Tutte specialization")
        c.details.update({name: list(poly.coefficients), "tutte": list(special.coefficients), "degree": degree})
        if want == poly:
            c.passed += 1
        else:
            report.fail(c, {**base, name: poly.to_document(), "tutte": dc.to_document(), "degree": degree})
    report.expect("T(1,1) equals hypertree count", dc(1, 1) == len(table),
                  {**base, "tutte": dc.to_document(), "hypertrees": len(table)})
    return report
