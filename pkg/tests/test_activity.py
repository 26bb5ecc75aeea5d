import pytest

from hypertutte import (
    BudgetExceeded,
    DomainMismatchError,
    Hypergraph,
    HypergraphError,
    IntPolynomial,
    TransferTable,
    activity_profile,
    build_bipartite,
    enumerate_hypertrees,
    exterior_polynomial,
    fiber_decomposition,
    interior_polynomial,
    verify_order_independence,
)
from hypertutte.activity import as_ordering, random_orderings

from oracles import all_orderings, brute_polynomials


class TestIntPolynomial:
    def test_trailing_zeros(self):
        assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
        assert IntPolynomial(()).degree == -1

    def test_from_exponents(self):
        assert IntPolynomial.from_exponents([0, 2, 2, 1]).coefficients == (1, 1, 2)
        assert IntPolynomial.from_exponents([]).coefficients == ()

    def test_eval_and_format(self):
        p = IntPolynomial((1, 2, 1))
        assert p(1) == 4 and p(2) == 9
        assert p.format("y") == "1 + 2y + y^2"
        assert p.to_document() == {"coefficients": [1, 2, 1]}


class TestOrdering:
    def test_parse(self, tri):
        B = build_bipartite(tri)
        assert as_ordering(B, "c, a,b") == ("c", "a", "b")
        assert as_ordering(B, None) == ("a", "b", "c")
        with pytest.raises(DomainMismatchError):
            as_ordering(B, ["a", "b"])
        with pytest.raises(DomainMismatchError):
            as_ordering(B, ["a", "b", "b"])

    def test_random_orderings_deterministic(self):
        assert random_orderings("abcd", 5, 3) == random_orderings("abcd", 5, 3)
        assert all(sorted(o) == list("abcd") for o in random_orderings("abcd", 5, 3))


class TestProfile:
    def test_tri(self, tri):
        p = activity_profile(build_bipartite(tri), (1, 1, 0), ["a", "b", "c"])
        assert p.internal_inactivity == 0
        assert p.external_inactivity == 1
        assert not p.externally_active["c"]

    def test_one(self, one):
        p = activity_profile(build_bipartite(one), {"e": 2})
        assert (p.internal_inactivity, p.external_inactivity) == (0, 0)

    def test_parallel(self, parallel):
        p = activity_profile(build_bipartite(parallel), (1, 1), ["e1", "e2"])
        assert not p.internally_active["e2"] and not p.externally_active["e2"]
        assert (p.internal_inactivity, p.external_inactivity) == (1, 1)
        assert p.to_document()["order"] == ["e1", "e2"]

    def test_minimum_always_active(self, small_corpus):
        for _, B in small_corpus[:40]:
            order = B.edges[::-1]
            for f in enumerate_hypertrees(B):
                p = activity_profile(B, f, order)
                assert p.internally_active[order[0]] and p.externally_active[order[0]]
                assert p.internal_activity + p.internal_inactivity == B.n_edges

    def test_table_matches_direct_queries(self, small_corpus):
        for _, B in small_corpus[:40]:
            table = TransferTable(B)
            order = B.edges[::-1]
            internal, external = table.inactive(order)
            for n, f in enumerate(table.hypertrees):
                p = activity_profile(B, f, order)
                for k, e in enumerate(B.edges):
                    assert internal[n, k] == (not p.internally_active[e])
                    assert external[n, k] == (not p.externally_active[e])


class TestPolynomials:
    def test_one(self, one):
        B = build_bipartite(one)
        assert interior_polynomial(B).coefficients == (1,)
        assert exterior_polynomial(B).coefficients == (1,)

    def test_tri_every_order(self, tri):
        B = build_bipartite(tri)
        for order in all_orderings(tri):
            assert interior_polynomial(B, order).coefficients == (1, 1, 1)
            assert exterior_polynomial(B, order).coefficients == (1, 2)

    def test_parallel(self, parallel):
        B = build_bipartite(parallel)
        assert interior_polynomial(B).coefficients == (1, 2)
        assert exterior_polynomial(B).coefficients == (1, 2)

    def test_single_vertex(self):
        B = build_bipartite(Hypergraph.build(["v"], {"x": ["v"], "y": ["v"]}))
        assert interior_polynomial(B).coefficients == exterior_polynomial(B).coefficients == (1,)

    def test_brute_force_oracle(self, small_corpus):
        checked = 0
        for H, B in small_corpus:
            if sum(len(vs) for _, vs in H.hyperedges) > 12:
                continue
            order = list(B.edges)[::-1]
            I, X = brute_polynomials(H, order)
            assert list(interior_polynomial(B, order).coefficients) == I
            assert list(exterior_polynomial(B, order).coefficients) == X
            checked += 1
        assert checked >= 80

    def test_value_at_one_and_degree(self, small_corpus):
        for _, B in small_corpus:
            table = TransferTable.of(B)
            I, X = table.polynomials()
            assert I(1) == X(1) == len(table)
            assert I.degree <= B.n_edges - 1 and X.degree <= B.n_edges - 1


class TestOrderIndependence:
    def test_tri(self, tri):
        r = verify_order_independence(build_bipartite(tri), "all")
        assert r.ok
        assert r.check("interior polynomial unique").details == {"orderings": 6, "distinct": [[1, 1, 1]]}

    def test_one(self, one):
        assert verify_order_independence(build_bipartite(one), "all").ok

    def test_random_mode_seed_reported(self, small_corpus):
        B = next(B for _, B in small_corpus if B.n_edges == 5)
        r = verify_order_independence(B, "random", samples=100, seed=42)
        assert r.ok and r.to_document()["seed"] == 42
        c = r.check("exterior polynomial unique")
        assert c.details["orderings"] == 100 and len(c.details["distinct"]) == 1

    def test_budget(self):
        B = build_bipartite(Hypergraph.build(["v"], {f"e{k}": ["v"] for k in range(9)}))
        with pytest.raises(BudgetExceeded):
            verify_order_independence(B, "all")
        with pytest.raises(HypergraphError):
            verify_order_independence(B, "bogus")

    def test_failure_produces_counterexample(self, tri):
        B = build_bipartite(tri)
        table = TransferTable(B)
        table.valid[2, 1, 0] = True  # corrupt one transfer so activities depend on the order
        r = verify_order_independence(B, "all", table=table)
        assert not r.ok
        cx = r.to_document()["counterexample"]
        assert cx["command"] == "verify order-independence"
        assert len(cx["orderings"]) == 2 and cx["polynomials"][0] != cx["polynomials"][1]


class TestFibers:
    def test_tri(self, tri):
        fibers = fiber_decomposition(build_bipartite(tri), "b", "c")
        assert sorted(f.members for f in fibers) == [((0, 1, 1),), ((1, 0, 1), (1, 1, 0))]
        assert all(f.is_consecutive for f in fibers)

    def test_parallel(self, parallel):
        (fiber,) = fiber_decomposition(build_bipartite(parallel), "e1", "e2")
        assert fiber.members == ((0, 2), (1, 1), (2, 0))
        assert fiber.values == [0, 1, 2] and len(fiber) == 3

    def test_same_edge(self, tri):
        with pytest.raises(HypergraphError):
            fiber_decomposition(build_bipartite(tri), "a", "a")

    def test_partition(self, small_corpus):
        for _, B in small_corpus[:60]:
            if B.n_edges < 2:
                continue
            e, g = B.edges[0], B.edges[-1]
            fibers = fiber_decomposition(B, e, g)
            members = [x for f in fibers for x in f.members]
            assert sorted(members) == enumerate_hypertrees(B)
            assert all(f.is_consecutive for f in fibers)
