import random

import pytest

from evencircuits import (
    enumerate_even_cycles,
    enumerate_indecomposable_even_circuits,
    enumerate_primitive_even_walks,
    minor_determinant,
    parse_graph,
    reduced_jacobian_dual,
)
from evencircuits.oracle import (
    oracle_even_circuits,
    oracle_even_cycles,
    oracle_primitive_even_walks,
)

from _helpers import (
    binomial,
    circuit_signatures,
    engine_signatures,
    numbered_graph,
    random_graph,
    signature_of,
)


class TestCircuits:
    def test_two_triangles_unique_certificate(self, two_triangles):
        certs = enumerate_indecomposable_even_circuits(two_triangles)
        assert len(certs) == 1
        cert = certs[0]
        assert cert.determinant.equal_up_to_sign(binomial([1, 4, 6], [2, 3, 5]))
        assert cert.circuit.vertex_names(two_triangles) == (
            "x1", "x2", "x3", "x4", "x5", "x3",
        )

    def test_bridged_triangles_has_none(self, bridged_triangles):
        assert enumerate_indecomposable_even_circuits(bridged_triangles) == []

    def test_tree_has_none(self):
        tree = numbered_graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
        assert enumerate_indecomposable_even_circuits(tree) == []

    def test_max_len_respected(self, two_triangles):
        assert enumerate_indecomposable_even_circuits(two_triangles, max_len=4) == []
        assert len(enumerate_indecomposable_even_circuits(two_triangles, max_len=6)) == 1

    def test_odd_max_len_rejected(self, two_triangles):
        with pytest.raises(ValueError):
            enumerate_indecomposable_even_circuits(two_triangles, max_len=5)


class TestCycles:
    def test_two_squares(self, two_squares):
        certs = enumerate_even_cycles(two_squares)
        assert [c.circuit.length for c in certs] == [4, 4, 6]
        assert {tuple(sorted(set(c.circuit.edges))) for c in certs} == {
            (1, 2, 3, 4),
            (4, 5, 6, 7),
            (1, 2, 3, 5, 6, 7),
        }
        hexagon = certs[-1]
        assert hexagon.determinant.equal_up_to_sign(binomial([2, 5, 7], [1, 3, 6]))

    def test_two_triangles_has_no_even_cycles(self, two_triangles):
        assert enumerate_even_cycles(two_triangles) == []

    def test_four_cycle(self):
        g = parse_graph("a b\nb c\nc d\nd a")
        certs = enumerate_even_cycles(g)
        assert len(certs) == 1
        assert certs[0].circuit.length == 4


class TestWalks:
    def test_bridged_triangles_contains_double_bridge_walk(self, bridged_triangles):
        certs = enumerate_primitive_even_walks(bridged_triangles, 8)
        sigs = engine_signatures(certs)
        assert signature_of([2, 3, 5, 7], [1, 4, 4, 6]) in sigs
        walk = next(
            c for c in certs
            if c.circuit.signature == signature_of([2, 3, 5, 7], [1, 4, 4, 6])
        )
        assert not walk.circuit.is_circuit  # edge T4 is crossed twice

    def test_walks_need_a_bound(self, bridged_triangles):
        with pytest.raises(Exception):
            enumerate_primitive_even_walks(bridged_triangles, None)

    def test_bipartite_walks_equal_cycles(self, two_squares):
        # two squares + isolated edge is bipartite: primitive even walks
        # and even cycles coincide
        bound = 2 * two_squares.vertex_count
        walks = engine_signatures(enumerate_primitive_even_walks(two_squares, bound))
        cycles = engine_signatures(enumerate_even_cycles(two_squares))
        assert walks == cycles

    def test_single_triangle_matches_oracle(self):
        g = numbered_graph(3, [(0, 1), (1, 2), (0, 2)])
        certs = enumerate_primitive_even_walks(g, 6)
        oracle = oracle_primitive_even_walks(g, 6)
        assert engine_signatures(certs) == circuit_signatures(oracle)
        # doubled triangle has a vanishing binomial: nothing primitive here
        assert certs == []


class TestDeterminism:
    def test_outputs_sorted_and_duplicate_free(self, two_squares):
        certs = enumerate_even_cycles(two_squares)
        keys = [c.sort_key for c in certs]
        assert keys == sorted(keys)
        assert len(engine_signatures(certs)) == len(certs)

    def test_worker_count_does_not_change_results(self, two_squares):
        seq = enumerate_even_cycles(two_squares, workers=1)
        par = enumerate_even_cycles(two_squares, workers=4)
        assert [c.sort_key for c in seq] == [c.sort_key for c in par]

    def test_certificates_recompute(self, two_squares):
        dual = reduced_jacobian_dual(two_squares)
        for cert in enumerate_even_cycles(two_squares):
            cols = [dual.column(i) for i in cert.cols]
            det = minor_determinant(cert.rows, cols)
            assert det == cert.determinant
            assert det.is_binomial

    def test_determinant_monomials_are_the_alternating_classes(self, two_squares):
        for cert in enumerate_even_cycles(two_squares):
            (m1, _), (m2, _) = cert.determinant.binomial_terms()
            assert {m1.edge_list(), m2.edge_list()} == set(
                cert.circuit.alternating_edge_classes()
            )


class TestOracleAgreement:
    def test_small_random_graphs(self):
        rng = random.Random(2024)
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 6), max_edges=10)
            eng = enumerate_indecomposable_even_circuits(g)
            assert engine_signatures(eng) == circuit_signatures(oracle_even_circuits(g))
            eng_cycles = enumerate_even_cycles(g)
            assert engine_signatures(eng_cycles) == circuit_signatures(
                oracle_even_cycles(g)
            )

    def test_representatives_match_oracle(self, two_triangles):
        (cert,) = enumerate_indecomposable_even_circuits(two_triangles)
        (oracle_circ,) = oracle_even_circuits(two_triangles)
        assert cert.circuit == oracle_circ

    def test_walk_agreement_on_random_graphs(self):
        rng = random.Random(99)
        for _ in range(40):
            g = random_graph(rng, rng.randint(0, 5), max_edges=8)
            eng = enumerate_primitive_even_walks(g, 8)
            assert engine_signatures(eng) == circuit_signatures(
                oracle_primitive_even_walks(g, 8)
            )
