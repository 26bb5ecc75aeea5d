"""Hypergraphs, their bipartite incidence graphs, and the rank function ``mu``.

Identifiers are strings. Hyperedges form a multiset: two hyperedges with the
same vertex set are still distinct because they carry distinct ids. All
index-based structures follow document order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateIdentifierError,
    EmptyHyperedgeError,
    LoopError,
    ParseError,
    UndeclaredVertexError,
    UnknownHyperedgeError,
)

__all__ = [
    "Hypergraph",
    "BipartiteGraph",
    "Multigraph",
    "parse_hypergraph",
    "hypergraph_from_document",
    "hypergraph_to_document",
    "dump_hypergraph",
    "parse_graph",
    "graph_from_document",
    "graph_to_document",
    "build_bipartite",
    "is_connected",
    "mu",
    "graph_to_hypergraph",
    "diagnostics",
]


def _check_label(label, what: str) -> str:
    if not isinstance(label, str) or not label:
        raise ParseError(f"{what} must be a nonempty string, got {label!r}")
    return label


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph ``(V, E)`` with ``E`` a multiset of vertex sets.

    ``hyperedges`` is a tuple of ``(id, frozenset_of_vertex_ids)`` pairs in
    document order.
    """

    vertices: tuple[str, ...]
    hyperedges: tuple[tuple[str, frozenset[str]], ...]

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            _check_label(v, "vertex id")
            if v in seen:
                raise DuplicateIdentifierError(f"duplicate vertex id {v!r}")
            seen.add(v)
        ids = set()
        for eid, members in self.hyperedges:
            _check_label(eid, "hyperedge id")
            if eid in ids:
                raise DuplicateIdentifierError(f"duplicate hyperedge id {eid!r}")
            ids.add(eid)
            if not members:
                raise EmptyHyperedgeError(f"empty hyperedge {eid!r}")
            missing = sorted(set(members) - seen)
            if missing:
                raise UndeclaredVertexError(
                    f"hyperedge {eid!r} references undeclared vertex {missing[0]!r}"
                )

    @classmethod
    def build(cls, vertices: Iterable[str], hyperedges: Mapping[str, Iterable[str]]
              | Iterable[tuple[str, Iterable[str]]]) -> "Hypergraph":
        """Convenience constructor: ``Hypergraph.build("abc", {"e": "ab"})``."""
        items = hyperedges.items() if isinstance(hyperedges, Mapping) else hyperedges
        return cls(tuple(vertices), tuple((e, frozenset(vs)) for e, vs in items))

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e for e, _ in self.hyperedges)

    def __str__(self):
        body = ", ".join(f"{e}={{{','.join(sorted(vs))}}}" for e, vs in self.hyperedges)
        return f"Hypergraph(V={{{','.join(self.vertices)}}}, E=[{body}])"


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph; ``edges`` holds ``(id, u, v)`` triples."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        vs = set()
        for v in self.vertices:
            _check_label(v, "vertex id")
            if v in vs:
                raise DuplicateIdentifierError(f"duplicate vertex id {v!r}")
            vs.add(v)
        ids = set()
        for eid, a, b in self.edges:
            _check_label(eid, "edge id")
            if eid in ids:
                raise DuplicateIdentifierError(f"duplicate edge id {eid!r}")
            ids.add(eid)
            for x in (a, b):
                if x not in vs:
                    raise UndeclaredVertexError(f"edge {eid!r} references undeclared vertex {x!r}")
            if a == b:
                raise LoopError(f"loop not representable: edge {eid!r} at {a!r}")

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]],
              prefix: str = "e") -> "Multigraph":
        """Build from endpoint pairs, naming edges ``e1, e2, ...``."""
        edges = [(f"{prefix}{i + 1}", a, b) for i, (a, b) in enumerate(edges)]
        return cls(tuple(vertices), tuple(edges))


@dataclass(frozen=True)
class BipartiteGraph:
    """The incidence graph of a hypergraph.

    ``members[i]`` lists the indices (into ``vertices``) of the vertices of
    hyperedge ``edges[i]``, sorted by vertex label.
    """

    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    members: tuple[tuple[int, ...], ...]
    _memo: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, e: str | int) -> int:
        """Degree of a hyperedge node, i.e. the size of the hyperedge."""
        i = e if isinstance(e, int) else self.index_of(e)
        return len(self.members[i])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.members)

    def index_of(self, e: str) -> int:
        try:
            return self.edge_index[e]
        except KeyError:
            raise UnknownHyperedgeError(f"unknown hyperedge {e!r}") from None

    def incidences(self) -> list[tuple[str, str]]:
        """All ``(vertex, hyperedge)`` pairs, sorted."""
        return sorted((self.vertices[v], e) for e, ms in zip(self.edges, self.members) for v in ms)

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(
            self.vertices,
            tuple((e, frozenset(self.vertices[v] for v in ms)) for e, ms in zip(self.edges, self.members)),
        )


# -- documents ---------------------------------------------------------------

def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed document: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("malformed document: top level must be an object")
    return doc


def _string_list(obj, what: str) -> list[str]:
    if not isinstance(obj, list):
        raise ParseError(f"malformed document: {what} must be a list")
    return [_check_label(x, what) for x in obj]


def hypergraph_from_document(doc: Mapping) -> Hypergraph:
    if not isinstance(doc, Mapping) or "vertices" not in doc or "hyperedges" not in doc:
        raise ParseError('malformed document: expected "vertices" and "hyperedges"')
    vertices = _string_list(doc["vertices"], "vertex id")
    if not isinstance(doc["hyperedges"], list):
        raise ParseError('malformed document: "hyperedges" must be a list')
    edges = []
    for item in doc["hyperedges"]:
        if not isinstance(item, Mapping) or "id" not in item or "vertices" not in item:
            raise ParseError('malformed document: hyperedge needs "id" and "vertices"')
        members = _string_list(item["vertices"], "vertex id")
        if len(set(members)) != len(members):
            raise DuplicateIdentifierError(f"hyperedge {item['id']!r} lists a vertex twice")
        edges.append((_check_label(item["id"], "hyperedge id"), frozenset(members)))
    return Hypergraph(tuple(vertices), tuple(edges))


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse a JSON hypergraph document."""
    return hypergraph_from_document(_load(text))


def hypergraph_to_document(H: Hypergraph) -> dict:
    return {
        "vertices": list(H.vertices),
        "hyperedges": [{"id": e, "vertices": sorted(vs)} for e, vs in H.hyperedges],
    }


def dump_hypergraph(H: Hypergraph) -> str:
    return json.dumps(hypergraph_to_document(H))


def graph_from_document(doc: Mapping) -> Multigraph:
    if not isinstance(doc, Mapping) or "vertices" not in doc or "edges" not in doc:
        raise ParseError('malformed document: expected "vertices" and "edges"')
    vertices = _string_list(doc["vertices"], "vertex id")
    if not isinstance(doc["edges"], list):
        raise ParseError('malformed document: "edges" must be a list')
    edges = []
    for item in doc["edges"]:
        if not isinstance(item, Mapping) or "id" not in item or "ends" not in item:
            raise ParseError('malformed document: edge needs "id" and "ends"')
        ends = _string_list(item["ends"], "vertex id")
        if len(ends) != 2:
            raise ParseError(f"malformed document: edge {item['id']!r} needs exactly two ends")
        edges.append((_check_label(item["id"], "edge id"), ends[0], ends[1]))
    return Multigraph(tuple(vertices), tuple(edges))


def parse_graph(text: str) -> Multigraph:
    return graph_from_document(_load(text))


def graph_to_document(G: Multigraph) -> dict:
    return {
        "vertices": list(G.vertices),
        "edges": [{"id": e, "ends": [a, b]} for e, a, b in G.edges],
    }


# -- structure ---------------------------------------------------------------

def build_bipartite(H: Hypergraph) -> BipartiteGraph:
    index = {v: i for i, v in enumerate(H.vertices)}
    members = tuple(tuple(index[v] for v in sorted(vs)) for _, vs in H.hyperedges)
    return BipartiteGraph(H.vertices, H.edge_ids, members)


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def is_connected(B: BipartiteGraph) -> bool:
    """True iff the incidence graph is connected (an empty graph is not)."""
    n, m = B.n_vertices, B.n_edges
    if n + m == 0:
        return False
    dsu = _DSU(n + m)
    comps = n + m
    for i, ms in enumerate(B.members):
        for v in ms:
            if dsu.union(v, n + i):
                comps -= 1
    return comps == 1


def _mu_indices(B: BipartiteGraph, idx: Sequence[int]) -> int:
    if not idx:
        return 0
    n = B.n_vertices
    dsu = _DSU(n + B.n_edges)
    touched = set()
    comps = 0
    for i in idx:
        comps += 1
        for v in B.members[i]:
            if v not in touched:
                touched.add(v)
                comps += 1
            if dsu.union(v, n + i):
                comps -= 1
    return len(touched) - comps


def mu(B: BipartiteGraph, S: Iterable[str]) -> int:
    """``|union of S| - c(S)``, with ``c`` the number of components of the
    subgraph spanned by the hyperedges in ``S``; zero for the empty set."""
    idx = sorted({B.index_of(e) for e in S})
    return _mu_indices(B, idx)


def mu_table(B: BipartiteGraph) -> list[int]:
    """``mu`` of every subset, indexed by bitmask over document order."""
    key = "mu_table"
    if key not in B._memo:
        m = B.n_edges
        B._memo[key] = [
            _mu_indices(B, [i for i in range(m) if mask >> i & 1]) for mask in range(1 << m)
        ]
    return B._memo[key]


def graph_to_hypergraph(G: Multigraph) -> Hypergraph:
    """Each graph edge becomes a two-element hyperedge with the same id."""
    for eid, a, b in G.edges:
        if a == b:
            raise LoopError(f"loop not representable: edge {eid!r} at {a!r}")
    return Hypergraph(G.vertices, tuple((e, frozenset((a, b))) for e, a, b in G.edges))


def diagnostics(H: Hypergraph) -> list[str]:
    """Non-fatal remarks about an instance."""
    notes = []
    for e, vs in H.hyperedges:
        if len(vs) == 1:
            notes.append(f"hyperedge {e!r} has a single vertex; every hypertree has f({e})=0")
    if not is_connected(build_bipartite(H)):
        notes.append("hypergraph is disconnected")
    return notes
