"""Seeded random connected hypergraphs for test corpora."""

from __future__ import annotations

import random

from .hypergraph import Hypergraph, build_bipartite, hypergraph_to_document, is_connected


def random_hypergraph(rng: random.Random, max_v: int = 7, max_e: int = 6,
                      parallel_rate: float = 0.15, max_tries: int = 1000) -> Hypergraph:
    """One connected hypergraph with ``|V| <= max_v`` and ``1 <= |E| <= max_e``.

    Sizes are drawn uniformly, hyperedge sizes lean towards 2 and 3, and with
    probability ``parallel_rate`` a hyperedge copies an earlier one. Draws
    that come out disconnected are rejected.
    """
    for _ in range(max_tries):
        n = rng.randint(1, max_v)
        m = rng.randint(1, max_e)
        vertices = [f"v{k + 1}" for k in range(n)]
        edges: list[tuple[str, frozenset[str]]] = []
        for k in range(m):
            if edges and rng.random() < parallel_rate:
                members = rng.choice(edges)[1]
            else:
                size = min(n, rng.choice((1, 2, 2, 2, 3, 3, 3, 4, 5, n)))
                members = frozenset(rng.sample(vertices, size))
            edges.append((f"e{k + 1}", members))
        H = Hypergraph(tuple(vertices), tuple(edges))
        if is_connected(build_bipartite(H)):
            return H
    raise RuntimeError(f"no connected hypergraph found in {max_tries} draws")


def generate_corpus(count: int, seed: int, max_v: int = 7, max_e: int = 6) -> list[Hypergraph]:
    rng = random.Random(seed)
    return [random_hypergraph(rng, max_v, max_e) for _ in range(count)]


def corpus_document(corpus: list[Hypergraph], seed: int | None = None) -> dict:
    doc: dict = {"hypergraphs": [hypergraph_to_document(H) for H in corpus]}
    if seed is not None:
        doc["seed"] = seed
    return doc
