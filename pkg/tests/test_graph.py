import os
import unittest

import networkx as nx
from hypothesis import given, settings as hypothesis_settings

os.environ.setdefault("LIMPACK_LOG_LEVEL", "WARNING")

from errors import InvalidInput
from generators import (complete, complete_bipartite, complete_minus_perfect_matching, cycle, path, random_tree,
                        standard_generators, star)
from graph import (VertexPartition, VertexSet, build_graph, complement, corona_k1, degree_stats, girth,
                   induced_subgraph, is_connected, is_tree, leaves, lexicographic_product, square,
                   support_vertices)
from graph_io import to_networkx
from graph_strategies import small_graphs


class TestBuildGraph(unittest.TestCase):

    def test_single_vertex(self):
        G = build_graph(1, [])
        self.assertEqual((G.n, G.m), (1, 0))

    def test_cycle_from_edges(self):
        """
        C4 built edge by edge is 2-regular.
        """
        G = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        self.assertEqual((G.max_degree, G.min_degree), (2, 2))
        self.assertEqual(G, cycle(4))

    def test_duplicate_edges_collapse(self):
        self.assertEqual(build_graph(2, [(0, 1), (1, 0)]).m, 1)

    def test_rejects_self_loop(self):
        with self.assertRaises(InvalidInput) as ctx:
            build_graph(3, [(1, 1)])
        self.assertEqual(ctx.exception.detail, "self_loop")

    def test_rejects_out_of_range_endpoint(self):
        with self.assertRaises(InvalidInput) as ctx:
            build_graph(3, [(0, 3)])
        self.assertEqual(ctx.exception.detail, "endpoint_out_of_range")


class TestOperators(unittest.TestCase):

    def test_degree_stats(self):
        self.assertEqual(tuple(degree_stats(build_graph(1, []))), (0, 0, 0))
        self.assertEqual(tuple(degree_stats(cycle(4))), (2, 2, 4))
        self.assertEqual(tuple(degree_stats(star(4))), (4, 1, 4))

    def test_complement(self):
        self.assertEqual(complement(complete(4)).m, 0)
        C5 = cycle(5)
        self.assertEqual(sorted(complement(C5).degrees), [2] * 5)
        self.assertTrue(is_connected(complement(C5)))
        matching = complement(complete_minus_perfect_matching(6))
        self.assertEqual(matching.m, 3)
        self.assertEqual(set(matching.degrees), {1})

    def test_girth(self):
        self.assertEqual(girth(cycle(5)), 5)
        self.assertIsNone(girth(random_tree(12, seed=3)))
        self.assertEqual(girth(complete_bipartite(2, 3)), 4)
        self.assertEqual(girth(complete(4)), 3)

    def test_square(self):
        P4 = square(path(4))
        self.assertEqual(sorted(P4.edges()), [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        self.assertEqual(square(complete(3)), complete(3))
        C6 = square(cycle(6))
        self.assertEqual(set(C6.degrees), {4})

    def test_lexicographic_product(self):
        P3K2 = lexicographic_product(path(3), complete(2))
        self.assertEqual(P3K2.n, 6)
        self.assertEqual(P3K2.max_degree, 5)
        H = cycle(5)
        self.assertEqual(lexicographic_product(build_graph(1, []), H), H)
        self.assertEqual(lexicographic_product(H, build_graph(1, [])), H)
        with self.assertRaises(InvalidInput):
            lexicographic_product(build_graph(0, []), H)

    def test_corona(self):
        self.assertEqual(corona_k1(build_graph(1, [])), complete(2))
        caterpillar = corona_k1(path(3))
        self.assertEqual(caterpillar.n, 6)
        self.assertEqual(len(leaves(caterpillar)), 3)
        sun = corona_k1(cycle(4))
        self.assertEqual(sorted(sun.degrees), [1] * 4 + [3] * 4)

    def test_induced_subgraph_relabels(self):
        sub = induced_subgraph(cycle(6), [5, 0, 1])
        self.assertEqual(sub.edges(), [(0, 1), (0, 2)])

    def test_support_vertices(self):
        self.assertEqual(support_vertices(star(3)), {0: [1, 2, 3]})
        self.assertEqual(support_vertices(path(4)), {1: [0], 2: [3]})


class TestVertexContainers(unittest.TestCase):

    def test_vertex_set_normalizes(self):
        S = VertexSet(n=5, members=(3, 1, 3))
        self.assertEqual(S.members, (1, 3))
        self.assertIn(3, S)
        self.assertNotIn(7, S)

    def test_vertex_set_out_of_range(self):
        with self.assertRaises(ValueError):
            VertexSet(n=2, members=(2,))

    def test_partition_from_classes(self):
        P = VertexPartition.from_classes(4, [[0, 3], [1], [2]])
        self.assertEqual(P.class_of, (0, 1, 2, 0))
        self.assertEqual(P.c, 3)

    def test_partition_rejects_overlap_and_gaps(self):
        with self.assertRaises(InvalidInput) as ctx:
            VertexPartition.from_classes(3, [[0, 1], [1, 2]])
        self.assertEqual(ctx.exception.detail, "overlapping_classes")
        with self.assertRaises(InvalidInput) as ctx:
            VertexPartition.from_classes(3, [[0, 1]])
        self.assertEqual(ctx.exception.detail, "partial_partition")


class TestGenerators(unittest.TestCase):

    def test_path_of_one(self):
        self.assertEqual(path(1), build_graph(1, []))

    def test_cocktail_party(self):
        G = complete_minus_perfect_matching(6)
        self.assertEqual(set(G.degrees), {4})
        with self.assertRaises(InvalidInput) as ctx:
            complete_minus_perfect_matching(5)
        self.assertEqual(ctx.exception.detail, "odd_order")

    def test_random_tree_is_deterministic(self):
        first, second = random_tree(10, seed=1), random_tree(10, seed=1)
        self.assertEqual(first.edges(), second.edges())
        self.assertTrue(is_tree(first))

    def test_standard_generators_dispatch(self):
        self.assertEqual(standard_generators("cycle", n=5), cycle(5))
        with self.assertRaises(InvalidInput):
            standard_generators("petersen")


def shortest_cycle_by_edge_removal(G):
    best = None
    for u, v in G.edges():
        H = to_networkx(G)
        H.remove_edge(u, v)
        if nx.has_path(H, u, v):
            length = nx.shortest_path_length(H, u, v) + 1
            best = length if best is None else min(best, length)
    return best


@hypothesis_settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=7))
def test_girth_matches_edge_removal(G):
    assert girth(G) == shortest_cycle_by_edge_removal(G)


@hypothesis_settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7))
def test_square_joins_vertices_at_distance_two(G):
    lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(G)))
    expected = sorted((u, v) for u in range(G.n) for v in range(u + 1, G.n) if lengths[u].get(v, 3) <= 2)
    assert sorted(square(G).edges()) == expected


@hypothesis_settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_complement_is_an_involution(G):
    assert complement(complement(G)) == G
    assert G.m + complement(G).m == G.n * (G.n - 1) // 2


@hypothesis_settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=4), small_graphs(max_n=4))
def test_lexicographic_product_degrees(G, H):
    product = lexicographic_product(G, H)
    assert product.n == G.n * H.n
    for g in range(G.n):
        for h in range(H.n):
            assert product.degrees[g * H.n + h] == G.degrees[g] * H.n + H.degrees[h]


@hypothesis_settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_corona_counts(G):
    sun = corona_k1(G)
    assert (sun.n, sun.m) == (2 * G.n, G.m + G.n)
    assert all(sun.degrees[G.n + v] == 1 for v in range(G.n))


if __name__ == "__main__":
    unittest.main()
