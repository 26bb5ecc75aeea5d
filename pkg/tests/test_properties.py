"""Randomized invariants over generated hypergraphs and graphs."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from hypertutte import (
    Multigraph,
    TransferTable,
    build_bipartite,
    crosscheck_specialization,
    enumerate_hypertrees,
    enumerate_hypertrees_by_transfer,
    is_hypertree,
    is_hypertree_polymatroid,
    parse_hypergraph,
    transfer_valid,
    transfer_valid_by_tightness,
    tutte_by_activities,
    tutte_deletion_contraction,
)
from hypertutte.corpus import random_hypergraph
from hypertutte.hypergraph import dump_hypergraph
from hypertutte.hypertrees import candidate_maps, find_realization, check_witness

from oracles import brute_hypertrees

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def hypergraph(seed, max_v=6, max_e=5):
    return random_hypergraph(random.Random(seed), max_v, max_e)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_parse_serialize_identity(seed):
    H = hypergraph(seed)
    assert parse_hypergraph(dump_hypergraph(H)) == H


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_enumerators_agree(seed):
    H = hypergraph(seed, 5, 4)
    B = build_bipartite(H)
    hts = enumerate_hypertrees(B)
    assert hts == brute_hypertrees(H)
    assert enumerate_hypertrees_by_transfer(B, hts[-1]) == hts


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_checkers_agree_on_box(seed):
    B = build_bipartite(hypergraph(seed))
    for f in candidate_maps(B):
        ok = is_hypertree(B, f)
        assert ok == is_hypertree_polymatroid(B, f)
        if ok:
            assert check_witness(B, find_realization(B, f), f)


@settings(max_examples=60, deadline=None)
@given(seeds, st.data())
def test_transfer_checkers_agree(seed, data):
    B = build_bipartite(hypergraph(seed))
    if B.n_edges < 2:
        return
    f = data.draw(st.sampled_from(enumerate_hypertrees(B)))
    s, t = data.draw(st.lists(st.sampled_from(B.edges), min_size=2, max_size=2, unique=True))
    assert transfer_valid(B, f, (s, t)) == transfer_valid_by_tightness(B, f, (s, t))


@settings(max_examples=60, deadline=None)
@given(seeds, st.randoms(use_true_random=False))
def test_polynomials_independent_of_order(seed, rnd):
    B = build_bipartite(hypergraph(seed))
    table = TransferTable.of(B)
    o1, o2 = list(B.edges), list(B.edges)
    rnd.shuffle(o1)
    rnd.shuffle(o2)
    assert table.polynomials(o1) == table.polynomials(o2)
    I, X = table.polynomials(o1)
    assert I(1) == X(1) == len(table)
    assert I.coefficients[0] >= 1 and X.coefficients[0] >= 1


@st.composite
def multigraphs(draw):
    n = draw(st.integers(2, 5))
    vs = [f"v{k}" for k in range(n)]
    # a random spanning tree keeps the graph connected; extra edges may be parallel
    pairs = [(vs[k], vs[draw(st.integers(0, k - 1))]) for k in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                          .filter(lambda p: p[0] != p[1]), max_size=8 - len(pairs)))
    pairs += [(vs[a], vs[b]) for a, b in extra]
    return Multigraph.build(vs, pairs)


@settings(max_examples=50, deadline=None)
@given(multigraphs(), st.randoms(use_true_random=False))
def test_tutte_oracles_agree(G, rnd):
    order = [e for e, _, _ in G.edges]
    rnd.shuffle(order)
    assert tutte_deletion_contraction(G) == tutte_by_activities(G, order)


@settings(max_examples=40, deadline=None)
@given(multigraphs())
def test_specialization_identities(G):
    assert crosscheck_specialization(G).ok
