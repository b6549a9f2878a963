import random

import pytest

from evencircuits import (
    Rejection,
    TPolynomial,
    block_decompose,
    linear_syzygies,
    minor_determinant,
    rees_nonlinear_generators,
    reduced_jacobian_dual,
    taylor_linear_columns,
    verify_in_J,
)
from evencircuits.oracle import oracle_primitive_even_walks
from evencircuits.rees import ZERO_DETERMINANT

from _helpers import binomial, cols_by_pairs, numbered_graph, random_graph, signature_of


class TestGenerators:
    def test_two_squares_degree_three(self, two_squares):
        gens = rees_nonlinear_generators(two_squares, 3)
        sigs = {g.walk.signature for g in gens}
        assert sigs == {
            signature_of([1, 3], [2, 4]),
            signature_of([4, 6], [5, 7]),
            signature_of([1, 3, 6], [2, 5, 7]),
        }
        assert sorted(g.degree for g in gens) == [2, 2, 3]
        for g in gens:
            assert g.binomial.is_binomial
            assert verify_in_J(g.binomial, two_squares)

    def test_two_triangles_includes_glued_circuit_binomial(self, two_triangles):
        gens = rees_nonlinear_generators(two_triangles, 3)
        assert signature_of([1, 4, 6], [2, 3, 5]) in {g.walk.signature for g in gens}
        # agreement with the direct walk search
        walks = oracle_primitive_even_walks(two_triangles, 6)
        assert {g.walk.signature for g in gens} == {w.signature for w in walks}

    def test_forest_has_none(self):
        tree = numbered_graph(6, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)])
        assert rees_nonlinear_generators(tree, 4) == []

    def test_degree_bound_is_mandatory(self, two_squares):
        with pytest.raises(ValueError):
            rees_nonlinear_generators(two_squares, 1)

    def test_outputs_verify_on_random_graphs(self):
        rng = random.Random(31)
        for _ in range(30):
            g = random_graph(rng, rng.randint(0, 6), max_edges=9)
            for gen in rees_nonlinear_generators(g, 4):
                assert verify_in_J(gen.binomial, g)
                assert gen.walk.is_primitive_walk


class TestMembership:
    def test_t2t3_not_in_J(self, two_squares):
        from evencircuits import TMonomial

        p = TPolynomial.term(TMonomial.from_edges([2, 3]))
        assert not verify_in_J(p, two_squares)

    def test_bridged_walk_binomial_in_J(self, bridged_triangles):
        assert verify_in_J(binomial([1, 4, 4, 6], [2, 3, 5, 7]), bridged_triangles)

    def test_square_binomial_in_J(self, two_squares):
        assert verify_in_J(binomial([1, 3], [2, 4]), two_squares)


class TestLinearSyzygies:
    def test_one_record_per_column(self, two_triangles):
        records = linear_syzygies(two_triangles)
        assert len(records) == len(taylor_linear_columns(two_triangles))

    def test_first_column_record(self, two_triangles):
        rec = linear_syzygies(two_triangles)[0]
        # column (1,2): x1*T2 - x3*T1
        assert rec.column == 1
        assert (rec.plus_vertex, rec.plus_edge) == (0, 2)
        assert (rec.minus_vertex, rec.minus_edge) == (2, 1)

    def test_records_match_columns(self, two_squares):
        for rec, col in zip(linear_syzygies(two_squares), taylor_linear_columns(two_squares)):
            assert rec.column == col.index
            assert {rec.plus_edge, rec.minus_edge} == set(col.edge_pair)


class TestBlockDecompose:
    def test_single_chain_is_one_binomial_block(self, two_squares):
        dual = reduced_jacobian_dual(two_squares)
        cols = cols_by_pairs(dual, [(1, 2), (3, 4)])
        dec = block_decompose([0, 2], cols)
        assert [b.kind for b in dec.blocks] == ["binomial"]
        assert dec.block_product().equal_up_to_sign(dec.determinant)

    def test_monomial_plus_chain(self, two_squares):
        dual = reduced_jacobian_dual(two_squares)
        # hexagon chain plus the single-entry column (2,3) on row x2
        cols = cols_by_pairs(dual, [(1, 2), (3, 5), (6, 7), (2, 3)])
        dec = block_decompose([0, 2, 4, 1], cols)
        kinds = sorted(b.kind for b in dec.blocks)
        assert kinds == ["binomial", "monomial"]
        assert dec.block_product().equal_up_to_sign(dec.determinant)
        for block in dec.blocks:
            if block.kind == "binomial":
                assert verify_in_J(block.determinant, two_squares)

    def test_zero_determinant_fails(self, two_triangles):
        dual = reduced_jacobian_dual(two_triangles)
        cols = cols_by_pairs(dual, [(1, 2), (1, 3), (2, 3)])
        dec = block_decompose([0, 1, 2], cols)
        assert isinstance(dec, Rejection)
        assert dec.reason == ZERO_DETERMINANT

    def test_random_selections_product_identity(self, two_squares):
        rng = random.Random(3)
        dual = reduced_jacobian_dual(two_squares)
        decomposed = 0
        for _ in range(300):
            t = rng.randint(2, 5)
            cols = rng.sample(dual.columns, t)
            rows = rng.sample(range(two_squares.vertex_count), t)
            det = minor_determinant(sorted(rows), sorted(cols, key=lambda c: c.index))
            dec = block_decompose(rows, cols)
            if isinstance(dec, Rejection):
                assert det.is_zero or not det.is_binomial
                continue
            decomposed += 1
            assert dec.block_product().equal_up_to_sign(det)
            for block in dec.blocks:
                if block.kind == "binomial":
                    assert verify_in_J(block.determinant, two_squares)
        assert decomposed > 0
