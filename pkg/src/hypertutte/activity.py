"""Internal/external activity and the interior and exterior polynomials.

Under an ordering of the hyperedges, a hyperedge ``e`` is *internally
inactive* at a hypertree ``f`` when some smaller hyperedge can receive
valence from ``e``, and *externally inactive* when some smaller hyperedge can
send valence to ``e``. The interior polynomial counts hypertrees by number of
internally inactive hyperedges; the exterior polynomial by externally
inactive ones.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, DomainMismatchError, HypergraphError
from .hypergraph import BipartiteGraph, hypergraph_to_document
from .hypertrees import (
    DEFAULT_STATE_BUDGET,
    Hypertree,
    HypertreeLike,
    as_vector,
    enumerate_hypertrees,
    transfer_valid,
)
from .report import Report

Ordering = tuple[str, ...]


def as_ordering(B: BipartiteGraph, order: Sequence[str] | str | None) -> Ordering:
    """Validate an ordering; ``None`` means document order, a string is split on commas."""
    if order is None:
        return B.edges
    if isinstance(order, str):
        order = [x.strip() for x in order.split(",") if x.strip()]
    order = tuple(order)
    if len(order) != B.n_edges or set(order) != set(B.edges):
        raise DomainMismatchError(f"ordering {list(order)} is not a permutation of {list(B.edges)}")
    return order


def _ranks(B: BipartiteGraph, order: Ordering) -> np.ndarray:
    r = np.empty(B.n_edges, dtype=np.int64)
    for pos, e in enumerate(order):
        r[B.index_of(e)] = pos
    return r


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, ascending coefficients, no trailing zeros."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "IntPolynomial":
        exps = list(exponents)
        counts = np.bincount(np.asarray(exps, dtype=np.int64), minlength=1) if exps else []
        return cls(tuple(int(x) for x in counts))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def to_document(self) -> dict:
        return {"coefficients": list(self.coefficients)}

    def format(self, var: str = "x") -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class ActivityProfile:
    order: Ordering
    internally_active: dict[str, bool]
    externally_active: dict[str, bool]

    @property
    def internal_activity(self) -> int:
        return sum(self.internally_active.values())

    @property
    def internal_inactivity(self) -> int:
        return len(self.internally_active) - self.internal_activity

    @property
    def external_activity(self) -> int:
        return sum(self.externally_active.values())

    @property
    def external_inactivity(self) -> int:
        return len(self.externally_active) - self.external_activity

    def to_document(self) -> dict:
        return {
            "order": list(self.order),
            "internally_active": dict(sorted(self.internally_active.items())),
            "externally_active": dict(sorted(self.externally_active.items())),
            "internal_inactivity": self.internal_inactivity,
            "external_inactivity": self.external_inactivity,
        }


def activity_profile(B: BipartiteGraph, f: HypertreeLike, order: Sequence[str] | None = None) -> ActivityProfile:
    """Per-hyperedge activities of one hypertree, from direct transfer queries."""
    f = as_vector(B, f)
    order = as_ordering(B, order)
    internal, external = {}, {}
    for pos, e in enumerate(order):
        smaller = order[:pos]
        internal[e] = not any(transfer_valid(B, f, (e, s)) for s in smaller)
        external[e] = not any(transfer_valid(B, f, (s, e)) for s in smaller)
    return ActivityProfile(order, internal, external)


class TransferTable:
    """All hypertrees of ``B`` with every single-transfer outcome precomputed.

    ``valid[i, s, t]`` is true when valence can move from hyperedge ``s`` to
    hyperedge ``t`` at hypertree ``hypertrees[i]``. Activities under any
    ordering then reduce to masked reductions over this array.
    """

    def __init__(self, B: BipartiteGraph, hypertrees: Sequence[Hypertree] | None = None,
                 budget: int = DEFAULT_STATE_BUDGET):
        self.B = B
        self.hypertrees = list(hypertrees) if hypertrees is not None else enumerate_hypertrees(B, budget)
        self.index = {f: i for i, f in enumerate(self.hypertrees)}
        N, m = len(self.hypertrees), B.n_edges
        valid = np.zeros((N, m, m), dtype=bool)
        for i, f in enumerate(self.hypertrees):
            for s in range(m):
                if f[s] == 0:
                    continue
                for t in range(m):
                    if t == s:
                        continue
                    g = list(f)
                    g[s] -= 1
                    g[t] += 1
                    valid[i, s, t] = tuple(g) in self.index
        self.valid = valid

    @classmethod
    def of(cls, B: BipartiteGraph, budget: int = DEFAULT_STATE_BUDGET) -> "TransferTable":
        """Cached per incidence graph."""
        key = ("transfer_table", budget)
        if key not in B._memo:
            B._memo[key] = cls(B, budget=budget)
        return B._memo[key]

    def __len__(self):
        return len(self.hypertrees)

    def inactive(self, order: Sequence[str] | None = None) -> tuple[np.ndarray, np.ndarray]:
        """Boolean ``(N, |E|)`` arrays: internally and externally inactive."""
        r = _ranks(self.B, as_ordering(self.B, order))
        smaller = r[None, :] < r[:, None]  # smaller[a, b]: b precedes a
        internal = (self.valid & smaller[None]).any(axis=2)
        external = (self.valid.transpose(0, 2, 1) & smaller[None]).any(axis=2)
        return internal, external

    def inactivities(self, order: Sequence[str] | None = None) -> tuple[np.ndarray, np.ndarray]:
        internal, external = self.inactive(order)
        return internal.sum(axis=1), external.sum(axis=1)

    def polynomials(self, order: Sequence[str] | None = None) -> tuple[IntPolynomial, IntPolynomial]:
        ii, ei = self.inactivities(order)
        return IntPolynomial.from_exponents(ii), IntPolynomial.from_exponents(ei)


def interior_polynomial(B: BipartiteGraph, order: Sequence[str] | None = None,
                        budget: int = DEFAULT_STATE_BUDGET) -> IntPolynomial:
    return TransferTable.of(B, budget).polynomials(order)[0]


def exterior_polynomial(B: BipartiteGraph, order: Sequence[str] | None = None,
                        budget: int = DEFAULT_STATE_BUDGET) -> IntPolynomial:
    return TransferTable.of(B, budget).polynomials(order)[1]


def random_orderings(edges: Sequence[str], k: int, seed: int) -> list[Ordering]:
    rng = random.Random(seed)
    out = []
    for _ in range(k):
        perm = list(edges)
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out


def verify_order_independence(B: BipartiteGraph, mode: str = "all", samples: int = 100,
                              seed: int = 0, max_edges: int = 8,
                              table: TransferTable | None = None,
                              orderings: Sequence[Sequence[str]] | None = None) -> Report:
    """Compute both polynomials under many orderings and compare them.

    ``mode="all"`` tries every permutation (refused beyond ``max_edges``
    hyperedges); ``mode="random"`` draws ``samples`` seeded permutations.
    An explicit ``orderings`` list overrides ``mode``.
    """
    if orderings is not None:
        orders = [as_ordering(B, o) for o in orderings]
        mode = "given"
    elif mode == "all":
        if B.n_edges > max_edges:
            raise BudgetExceeded(
                f"{math.factorial(B.n_edges)} orderings of {B.n_edges} hyperedges exceeds the budget "
                f"(max {max_edges} hyperedges); use mode='random'"
            )
        orders = list(permutations(B.edges))
    elif mode == "random":
        orders = random_orderings(B.edges, samples, seed)
    else:
        raise HypergraphError(f"unknown mode {mode!r}")
    table = table or TransferTable.of(B)
    report = Report("verify order-independence", seed=seed if mode == "random" else None)
    seen_i: dict[tuple, Ordering] = {}
    seen_x: dict[tuple, Ordering] = {}
    for order in orders:
        I, X = table.polynomials(order)
        seen_i.setdefault(I.coefficients, order)
        seen_x.setdefault(X.coefficients, order)
    for name, seen, var in (("interior", seen_i, "x"), ("exterior", seen_x, "y")):
        c = report.check(f"{name} polynomial unique")
        c.details["orderings"] = len(orders)
        c.details["distinct"] = [list(k) for k in seen]
        if len(seen) == 1:
            c.passed += 1
        else:
            (p, o1), (q, o2) = list(seen.items())[:2]
            report.fail(c, {
                "command": "verify order-independence",
                "hypergraph": hypergraph_to_document(B.to_hypergraph()),
                "orderings": [list(o1), list(o2)],
                "polynomials": [list(p), list(q)],
            })
    c = report.check("value at 1 equals hypertree count")
    I, X = table.polynomials(orders[0] if orders else None)
    c.record(I(1) == X(1) == len(table))
    return report


@dataclass(frozen=True)
class Fiber:
    """Hypertrees agreeing off ``{first, second}``, sorted by value at ``first``."""

    first: str
    second: str
    members: tuple[Hypertree, ...]
    first_index: int

    @property
    def values(self) -> list[int]:
        return [g[self.first_index] for g in self.members]

    @property
    def is_consecutive(self) -> bool:
        v = self.values
        return all(b == a + 1 for a, b in zip(v, v[1:]))

    def __len__(self):
        return len(self.members)


def fiber_decomposition(B: BipartiteGraph, first: str, second: str,
                        hypertrees: Sequence[Hypertree] | None = None) -> list[Fiber]:
    """Partition the hypertrees by their restriction to all other hyperedges.

    Fibers are listed by that restriction (lexicographic, document order).
    """
    i, j = B.index_of(first), B.index_of(second)
    if i == j:
        raise HypergraphError("fiber decomposition needs two distinct hyperedges")
    if hypertrees is None:
        hypertrees = enumerate_hypertrees(B)
    groups: dict[tuple, list[Hypertree]] = {}
    for f in hypertrees:
        rest = tuple(x for k, x in enumerate(f) if k not in (i, j))
        groups.setdefault(rest, []).append(f)
    return [
        Fiber(first, second, tuple(sorted(groups[rest], key=lambda g: g[i])), i)
        for rest in sorted(groups)
    ]
