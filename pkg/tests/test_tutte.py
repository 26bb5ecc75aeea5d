from itertools import permutations

import pytest

from hypertutte import (
    LoopError,
    Multigraph,
    TuttePolynomial,
    crosscheck_specialization,
    tutte_by_activities,
    tutte_deletion_contraction,
)
from hypertutte.tutte import reversed_in_degree, spanning_trees
from hypertutte.activity import IntPolynomial


def cycle(n):
    vs = [f"v{k}" for k in range(n)]
    return Multigraph.build(vs, [(vs[k], vs[(k + 1) % n]) for k in range(n)])


def T(*terms):
    return TuttePolynomial({(i, j): c for i, j, c in terms})


EDGE = Multigraph.build(["v1", "v2"], [("v1", "v2")])
DIGON = Multigraph.build(["v1", "v2"], [("v1", "v2"), ("v1", "v2")])
PATH3 = Multigraph.build(["v1", "v2", "v3"], [("v1", "v2"), ("v2", "v3")])
K4 = Multigraph.build("abcd", [(u, v) for k, u in enumerate("abcd") for v in "abcd"[k + 1:]])


class TestDeletionContraction:
    def test_bridge(self):
        assert tutte_deletion_contraction(EDGE) == T((1, 0, 1))

    def test_triangle(self, triangle_graph):
        assert tutte_deletion_contraction(triangle_graph) == T((2, 0, 1), (1, 0, 1), (0, 1, 1))

    def test_digon(self):
        assert tutte_deletion_contraction(DIGON) == T((1, 0, 1), (0, 1, 1))

    def test_cycle_formula(self):
        # T(C_n) = y + x + x^2 + ... + x^(n-1)
        for n in range(3, 8):
            want = T((0, 1, 1), *[(i, 0, 1) for i in range(1, n)])
            assert tutte_deletion_contraction(cycle(n)) == want

    def test_k4(self):
        want = T((3, 0, 1), (0, 3, 1), (2, 0, 3), (0, 2, 3), (1, 1, 4), (1, 0, 2), (0, 1, 2))
        assert tutte_deletion_contraction(K4) == want
        assert want(1, 1) == 16

    def test_loop_rejected(self):
        G = Multigraph.__new__(Multigraph)
        object.__setattr__(G, "vertices", ("a",))
        object.__setattr__(G, "edges", (("x", "a", "a"),))
        with pytest.raises(LoopError):
            tutte_deletion_contraction(G)


class TestActivities:
    def test_triangle_all_orders(self, triangle_graph):
        for order in permutations(["e1", "e2", "e3"]):
            assert tutte_by_activities(triangle_graph, order) == T((2, 0, 1), (1, 0, 1), (0, 1, 1))

    def test_path(self):
        assert tutte_by_activities(PATH3) == T((2, 0, 1))

    def test_digon(self):
        assert tutte_by_activities(DIGON, "e2,e1") == T((1, 0, 1), (0, 1, 1))

    def test_order_independent_small(self):
        for G in (cycle(4), DIGON, Multigraph.build("abc", [("a", "b"), ("a", "b"), ("b", "c"), ("c", "a")])):
            ids = [e for e, _, _ in G.edges]
            values = {tutte_by_activities(G, o) for o in permutations(ids)}
            assert len(values) == 1
            assert values == {tutte_deletion_contraction(G)}

    def test_spanning_tree_count(self):
        assert len(spanning_trees(K4)) == 16


class TestPolynomialType:
    def test_document_sorted(self):
        p = T((0, 1, 1), (1, 0, 1), (2, 0, 1))
        assert p.to_document() == {"coeffs": [[0, 1, 1], [1, 0, 1], [2, 0, 1]]}
        assert str(p) == "x^2 + x + y"

    def test_specializations(self, triangle_graph):
        p = tutte_deletion_contraction(triangle_graph)
        assert p.at_y_one().coefficients == (1, 1, 1)
        assert p.at_x_one().coefficients == (2, 1)

    def test_reverse(self):
        assert reversed_in_degree(IntPolynomial((1, 1, 1)), 2).coefficients == (1, 1, 1)
        assert reversed_in_degree(IntPolynomial((2, 1)), 1).coefficients == (1, 2)
        assert reversed_in_degree(IntPolynomial((0, 0, 1)), 2).coefficients == (1,)
        with pytest.raises(ValueError):
            reversed_in_degree(IntPolynomial((1, 1, 1)), 1)


class TestCrosscheck:
    def test_triangle(self, triangle_graph):
        r = crosscheck_specialization(triangle_graph)
        assert r.ok
        assert r.check("interior equals reversed Tutte specialization").details["interior"] == [1, 1, 1]
        assert r.check("exterior equals reversed Tutte specialization").details["exterior"] == [1, 2]

    def test_path(self):
        r = crosscheck_specialization(PATH3)
        assert r.ok
        assert r.check("interior equals reversed Tutte specialization").details["interior"] == [1]

    @pytest.mark.parametrize("G", [cycle(6), K4, DIGON])
    def test_more(self, G):
        assert crosscheck_specialization(G).ok
