"""Brute-force reference implementations, deliberately naive and independent
of the library's search and enumeration code."""

from itertools import combinations, permutations


def incidence_pairs(H):
    return [(v, e) for e, vs in H.hyperedges for v in sorted(vs)]


def is_spanning_tree(nodes, edges):
    parent = {x: x for x in nodes}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return len(edges) == len(nodes) - 1


def brute_hypertrees(H):
    """Degree vectors minus one over every spanning tree of the incidence graph."""
    ids = [e for e, _ in H.hyperedges]
    nodes = [("v", v) for v in H.vertices] + [("e", e) for e in ids]
    pairs = [(("v", v), ("e", e)) for v, e in incidence_pairs(H)]
    out = set()
    for tree in combinations(pairs, len(nodes) - 1):
        if is_spanning_tree(nodes, tree):
            deg = {e: -1 for e in ids}
            for _, (_, e) in tree:
                deg[e] += 1
            out.add(tuple(deg[e] for e in ids))
    return sorted(out)


def brute_polynomials(H, order):
    """Interior and exterior coefficient lists from the brute-force hypertree set."""
    ids = [e for e, _ in H.hyperedges]
    hts = set(brute_hypertrees(H))

    def can(f, s, t):
        if f[s] == 0:
            return False
        g = list(f)
        g[s] -= 1
        g[t] += 1
        return tuple(g) in hts

    pos = {e: k for k, e in enumerate(order)}
    ii, ei = [], []
    for f in hts:
        ni = ne = 0
        for a, e in enumerate(ids):
            smaller = [b for b, x in enumerate(ids) if pos[x] < pos[e]]
            ni += any(can(f, a, b) for b in smaller)
            ne += any(can(f, b, a) for b in smaller)
        ii.append(ni)
        ei.append(ne)

    def coeffs(exps):
        c = [0] * (max(exps) + 1)
        for x in exps:
            c[x] += 1
        return c

    return coeffs(ii), coeffs(ei)


def brute_mu(H, S):
    S = set(S)
    verts = set()
    for e, vs in H.hyperedges:
        if e in S:
            verts |= vs
    if not S:
        return 0
    # components of the subgraph spanned by S, counted by repeated merging
    comps = [set(vs) for e, vs in H.hyperedges if e in S]
    merged = True
    while merged:
        merged = False
        for i, j in combinations(range(len(comps)), 2):
            if comps[i] & comps[j]:
                comps[i] |= comps.pop(j)
                merged = True
                break
    return len(verts) - len(comps)


def all_orderings(H):
    return list(permutations([e for e, _ in H.hyperedges]))
