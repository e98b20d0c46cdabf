import os
import unittest

import pytest

os.environ.setdefault("LIMPACK_LOG_LEVEL", "WARNING")

from errors import InvalidInput
from generators import complete, cycle, path
from graph import VertexSet, build_graph, corona_k1
from harness import enumerate_labeled_graphs, random_graphs
from reductions import (check_reduction_identity, lift_certificate, lower_certificate, normalize_with_pendants,
                        reduce_op_to_2tlp, structure_flags)
from solvers import l_kt, rho_o
from solvers.oracle import enumerate_optimal_sets
from validators import is_k_total_limited_packing, is_open_packing


class TestReduction(unittest.TestCase):

    def test_instances(self):
        """
        The target is the corona and the threshold shifts by n.
        """
        for G in (path(3), cycle(4), build_graph(1, [])):
            instance = reduce_op_to_2tlp(G)
            self.assertEqual(instance.target, corona_k1(G))
            self.assertEqual(instance.threshold(2), G.n + 2)

    def test_identity(self):
        for G, rho_o, l2t in ((path(3), 2, 5), (cycle(4), 2, 6), (build_graph(1, []), 1, 2)):
            check = check_reduction_identity(G)
            self.assertTrue(check.holds)
            self.assertTrue(check.complete)
            self.assertEqual((check.rho_o, check.l2t_target), (rho_o, l2t))

    def test_identity_with_tiny_budget_is_inconclusive(self):
        check = check_reduction_identity(complete(6), budget=1)
        if not check.complete:
            self.assertIsNone(check.holds)

    def test_lift(self):
        P3 = path(3)
        lifted = lift_certificate(P3, VertexSet(n=3, members=(0, 1)))
        self.assertEqual(len(lifted), 5)
        self.assertTrue(is_k_total_limited_packing(corona_k1(P3), lifted, 2))
        C4 = cycle(4)
        self.assertEqual(len(lift_certificate(C4, VertexSet(n=4, members=(0, 1)))), 6)
        self.assertEqual(lift_certificate(C4, VertexSet(n=4)).members, (4, 5, 6, 7))

    def test_lift_rejects_non_open_packing(self):
        with self.assertRaises(InvalidInput) as ctx:
            lift_certificate(path(3), VertexSet(n=3, members=(0, 2)))
        self.assertEqual(ctx.exception.detail, "not_an_open_packing")

    def test_normalize_and_lower(self):
        """
        An optimum of the corona may skip pendants; normalizing puts them all back.
        """
        C4 = cycle(4)
        target = corona_k1(C4)
        optimum = l_kt(target, 2).certificate
        normalized = normalize_with_pendants(C4, optimum)
        self.assertEqual(len(normalized), len(optimum))
        self.assertTrue(all(v in normalized for v in range(4, 8)))
        lowered = lower_certificate(C4, optimum)
        self.assertTrue(is_open_packing(C4, lowered))
        self.assertGreaterEqual(len(lowered), len(optimum) - C4.n)

    def test_structure_flags(self):
        self.assertEqual(structure_flags(path(4)),
                         {"bipartite": True, "bipartite_corona": True, "chordal": True, "chordal_corona": True})
        flags = structure_flags(cycle(5))
        self.assertFalse(flags["bipartite"] or flags["bipartite_corona"])
        self.assertFalse(flags["chordal"])


@pytest.mark.slow
def test_identity_on_random_graphs():
    for G in random_graphs(100, 10, seed=7):
        check = check_reduction_identity(G)
        assert check.complete and check.holds, G.edges()
        flags = structure_flags(G)
        assert flags["bipartite"] == flags["bipartite_corona"]
        assert flags["chordal"] == flags["chordal_corona"]


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 6))
def test_every_optimal_corona_set_lowers_to_an_optimal_open_packing(n):
    for G in enumerate_labeled_graphs(n):
        best = rho_o(G).value
        for S in enumerate_optimal_sets(corona_k1(G), "l_kt", 2):
            lowered = lower_certificate(G, S)
            assert is_open_packing(G, lowered)
            assert len(lowered) == best == len(S) - n


if __name__ == "__main__":
    unittest.main()
