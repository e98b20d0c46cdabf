import math
import os
import unittest

import pytest

os.environ.setdefault("LIMPACK_LOG_LEVEL", "WARNING")

from errors import InvalidInput
from families import (FAMILIES, assemble_omega, build_canonical_omega, build_lambda, build_sharpness,
                      canonical_omega_spec, gap_graph, gap_graph_certificates, generate_instance, girth_pendant_cycle,
                      has_lambda_structure, is_in_gamma, is_triple_common_neighbor_family, lambda_partition,
                      ng_cocktail, random_lambda, tree_diff_certificates, tree_diff_sharp, validate_omega)
from generators import complete, cycle, star
from graph import VertexSet, complement, girth, is_tree
from graph_io import from_graph6
from schemas import LambdaSpec, OmegaSpec
from solvers import chi_xk, d_xk, gamma_xk, l_k, l_kt
from validators import is_k_limited_packing, is_k_total_limited_packing


def pair_block_spec(drop_one: bool = False) -> OmegaSpec:
    blocks = [complete(2)] * 4
    cross = [(u, v) for u in range(8) for v in range(u + 1, 8) if u // 2 != v // 2]
    if drop_one:
        cross = cross[1:]
    return OmegaSpec(k=2, blocks=blocks, cross_edges=cross, target_q=7)


class TestOmega(unittest.TestCase):

    def test_pair_blocks_of_k8(self):
        result = validate_omega(pair_block_spec())
        self.assertTrue(result.valid)
        self.assertEqual((result.t, result.r, result.q_observed), (4, 0, 7))

    def test_missing_cross_edge_breaks_degree(self):
        result = validate_omega(pair_block_spec(drop_one=True))
        self.assertFalse(result.valid)
        self.assertTrue(result.diagnostics)

    def test_single_block(self):
        spec = OmegaSpec(k=2, blocks=[complete(3)], target_q=2)
        self.assertTrue(validate_omega(spec).valid)

    def test_cross_edge_inside_block_rejected(self):
        spec = OmegaSpec(k=2, blocks=[complete(2), complete(2)], cross_edges=[(0, 1)], target_q=3)
        with self.assertRaises(InvalidInput) as ctx:
            assemble_omega(spec)
        self.assertEqual(ctx.exception.detail, "cross_edge_inside_block")

    def test_canonical_builder(self):
        G, blocks = build_canonical_omega(2, 4, 0)
        self.assertEqual(G, complete(8))
        self.assertEqual(d_xk(G, 2).value, 4)
        self.assertEqual(blocks.c, 4)
        H, _ = build_canonical_omega(1, 2, 0)
        self.assertEqual(H, complete(2))
        self.assertEqual(d_xk(H, 1).value, H.min_degree + 1)
        single, _ = build_canonical_omega(2, 1, 1)
        self.assertEqual(d_xk(single, 2).value, 1)

    def test_canonical_specs_validate(self):
        for k, t, r in [(1, 3, 0), (2, 3, 1), (3, 2, 2)]:
            self.assertTrue(validate_omega(canonical_omega_spec(k, t, r)).valid, (k, t, r))

    def test_infeasible_parameters(self):
        with self.assertRaises(InvalidInput):
            canonical_omega_spec(2, 3, 2)


class TestLambda(unittest.TestCase):

    def test_three_parts_of_four(self):
        spec = LambdaSpec(r=3, s=4)
        G = build_lambda(spec)
        self.assertEqual(G.n, 12)
        self.assertEqual(set(G.degrees), {5})
        self.assertTrue(has_lambda_structure(G, lambda_partition(spec)))
        self.assertEqual(chi_xk(G, 2).value, 3)

    def test_two_parts_of_two_is_k4(self):
        self.assertEqual(build_lambda(LambdaSpec(r=2, s=2)), complete(4))

    def test_bounds_tight_on_eight_vertices(self):
        G = build_lambda(LambdaSpec(r=2, s=4))
        chi, l2 = chi_xk(G, 2).value, l_k(G, 2).value
        self.assertEqual(2 * G.n * chi, 2 * G.m + G.n)
        self.assertEqual(l2 * ((2 * chi - 1) ** 2 - 1), 4 * G.m - 2 * G.n)

    def test_three_parts_of_four_meets_both_bounds(self):
        G = build_lambda(LambdaSpec(r=3, s=4))
        n, m = G.n, G.m
        l2 = l_k(G, 2).value
        self.assertEqual(l2, 4)
        self.assertEqual(gamma_xk(G, 2).value, l2)
        self.assertEqual((1 + 2 * m / n) / 2, 3.0)
        self.assertEqual((1 + math.sqrt(1 + (4 * m - 2 * n) / l2)) / 2, 3.0)
        self.assertEqual(chi_xk(G, 2).value, 3)

    def test_odd_part_rejected(self):
        with self.assertRaises(InvalidInput):
            build_lambda(LambdaSpec(r=2, s=3))

    def test_random_member(self):
        spec = LambdaSpec(r=3, s=6)
        G = random_lambda(3, 6, seed=5)
        self.assertEqual(set(G.degrees), {5})
        self.assertTrue(has_lambda_structure(G, lambda_partition(spec)))
        self.assertEqual(G, random_lambda(3, 6, seed=5))


class TestRecognizers(unittest.TestCase):

    def test_triple_common_neighbor(self):
        self.assertTrue(is_triple_common_neighbor_family(complete(5)))
        self.assertTrue(is_triple_common_neighbor_family(complete(4)))
        self.assertFalse(is_triple_common_neighbor_family(cycle(5)))
        with self.assertRaises(InvalidInput):
            is_triple_common_neighbor_family(complete(2))

    def test_gamma_membership(self):
        self.assertTrue(is_in_gamma(star(4)))
        self.assertFalse(is_in_gamma(cycle(6)))
        self.assertTrue(is_in_gamma(complete(5)))


class TestSharpness(unittest.TestCase):

    def test_cocktail_party(self):
        G = ng_cocktail(3)
        self.assertEqual(chi_xk(G, 2).value + chi_xk(complement(G), 2).value, 4)
        with self.assertRaises(InvalidInput):
            ng_cocktail(2)

    def test_pendant_cycle(self):
        G = girth_pendant_cycle(6, [0, 3])
        self.assertEqual(G.n, 8)
        self.assertEqual(girth(G), 6)
        self.assertEqual(l_kt(G, 2).value, 6)
        with self.assertRaises(InvalidInput) as ctx:
            girth_pendant_cycle(6, [0, 4])
        self.assertEqual(ctx.exception.detail, "bad_spacing")

    def test_tree_difference(self):
        T = tree_diff_sharp(1)
        self.assertTrue(is_tree(T))
        self.assertEqual(T.n, 8)
        total, closed = tree_diff_certificates(1)
        self.assertTrue(is_k_total_limited_packing(T, total, 2))
        self.assertTrue(is_k_limited_packing(T, closed, 2))
        self.assertEqual(len(closed), 5)
        self.assertTrue(is_k_limited_packing(T, VertexSet(n=8, members=(1, 2, 4, 5, 6, 7)), 2))
        self.assertEqual((l_kt(T, 2).value, l_k(T, 2).value), (7, 6))

    def test_tree_difference_certificates_t2(self):
        T = tree_diff_sharp(2)
        total, closed = tree_diff_certificates(2)
        self.assertEqual((len(total), len(closed)), (16, 11))
        self.assertTrue(is_k_total_limited_packing(T, total, 2))
        self.assertTrue(is_k_limited_packing(T, closed, 2))

    def test_gap_graph_certificates(self):
        G = gap_graph(1)
        total, closed = gap_graph_certificates(1)
        self.assertEqual(G.n, 27)
        self.assertEqual((len(total), len(closed)), (24, 14))
        self.assertTrue(is_k_total_limited_packing(G, total, 2))
        self.assertTrue(is_k_limited_packing(G, closed, 2))

    def test_dispatch(self):
        self.assertEqual(build_sharpness("ng_cocktail", p=3), ng_cocktail(3))
        with self.assertRaises(InvalidInput):
            build_sharpness("petersen")
        with self.assertRaises(InvalidInput):
            build_sharpness("gap_graph")


def test_generate_instance_sidecar():
    instance = generate_instance("tree_diff_sharp", t=1)
    assert instance.expected == {"k": 2, "l_kt": 7, "l_k": 6}
    assert from_graph6(instance.graph6) == tree_diff_sharp(1)
    assert (instance.n, instance.m) == (8, 7)


@pytest.mark.parametrize("family, params", [
    ("omega", {"k": 2, "t": 3}),
    ("lambda", {"r": 2, "s": 4}),
    ("random_lambda", {"r": 2, "s": 4, "seed": 3}),
    ("ng_cocktail", {"p": 3}),
    ("girth_pendant_cycle", {"c_len": 5, "pendant_positions": [0]}),
    ("tree_diff_sharp", {"t": 1}),
    ("gap_graph", {"p": 1}),
])
def test_every_family_generates(family, params):
    assert family in FAMILIES
    instance = generate_instance(family, **params)
    assert instance.n == from_graph6(instance.graph6).n


def test_generate_missing_parameter():
    with pytest.raises(InvalidInput) as exc:
        generate_instance("gap_graph")
    assert exc.value.detail == "missing_parameter"


@pytest.mark.slow
def test_gap_graph_exact_values():
    G = gap_graph(1)
    assert l_kt(G, 2).value == 24
    assert l_k(G, 2).value == 14


@pytest.mark.slow
def test_tree_difference_exact_values_t2():
    T = tree_diff_sharp(2)
    assert l_kt(T, 2).value == 16
    assert l_k(T, 2).value == 12
