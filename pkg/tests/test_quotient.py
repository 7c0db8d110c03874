"""Tests for graded quotients: standard monomials, Hilbert functions, reduction tables"""

import pytest
from hypothesis import given, settings, strategies as st

from grasschar.algebra.gf2poly import PolyGF2
from grasschar.algebra.groebner import GroebnerBasis, buchberger_reduced, normal_form
from grasschar.algebra.quotient import GradedQuotient
from grasschar.core.exceptions import AlignmentError, SealedRangeError
from grasschar.rings.builders import borel_presentation, image_presentation, image_ring
from grasschar.rings.families import IMAGE_TABLE, g_poly, oriented_table

W2 = PolyGF2.variable(IMAGE_TABLE, "w2")
W3 = PolyGF2.variable(IMAGE_TABLE, "w3")


@pytest.fixture(scope="module")
def j15() -> GradedQuotient:
    return image_ring(15)


class TestStandardMonomials:
    def test_free_ring(self):
        free = GradedQuotient(GroebnerBasis(IMAGE_TABLE, []), name="free")
        assert not free.is_finite()
        assert free.dimension(6) == 2
        assert free.hilbert_function(6) == [1, 0, 1, 1, 1, 1, 2]
        assert free.total_dimension() is None

    def test_image_ring_top_class(self):
        ring = image_ring(7)
        assert ring.standard_monomials(8) == [IMAGE_TABLE.monomial(w2=1, w3=2)]
        assert ring.top_degree() == 8
        assert ring.standard_monomials(0) == [IMAGE_TABLE.monomial()]
        assert ring.dimension(1) == 0

    def test_descending_lex(self, j15):
        for d in range(j15.top_degree() + 1):
            keys = j15.basis_keys(d)
            assert list(keys) == sorted(keys, reverse=True)

    @pytest.mark.parametrize("n", [7, 8, 15])
    def test_counts_match_row_reduction(self, n, dimension_oracle):
        presentation = image_presentation(n)
        ring = image_ring(n)
        for d in range(ring.top_degree() + 3):
            assert ring.dimension(d) == dimension_oracle(IMAGE_TABLE, list(presentation.generators), d)

    def test_borel_counts_match_row_reduction(self, dimension_oracle):
        presentation = borel_presentation(7, 3)
        gb = buchberger_reduced(presentation.generators, presentation.table)
        ring = GradedQuotient(gb)
        for d in range(14):
            assert ring.dimension(d) == dimension_oracle(presentation.table, list(presentation.generators), d)

    def test_unit_ideal(self):
        ring = GradedQuotient(GroebnerBasis(IMAGE_TABLE, [PolyGF2.one(IMAGE_TABLE)]))
        assert ring.dimension(0) == 0
        assert ring.dimension(5) == 0


class TestReduction:
    def test_coordinates_and_element(self):
        ring = image_ring(7)
        mask = ring.coordinates(W2 ** 4, 8)
        assert mask == 1
        assert ring.element(mask, 8) == W2 * W3 ** 2

    @given(st.lists(st.tuples(st.integers(0, 10), st.integers(0, 10)), max_size=8))
    @settings(max_examples=60, deadline=None)
    def test_matches_division(self, j15, vectors):
        p = PolyGF2.from_exponents(IMAGE_TABLE, vectors)
        assert j15.normal_form(p) == normal_form(p, j15.gb)

    def test_vanishes_above_top(self, j15):
        top = j15.top_degree()
        assert j15.is_zero(W2 ** 20)
        assert j15.dimension(top + 1) == 0

    def test_alignment(self):
        with pytest.raises(AlignmentError):
            image_ring(7).normal_form(PolyGF2.variable(oriented_table(3), "a"))


class TestSealing:
    def test_finite_seal_defaults_to_top(self):
        ring = image_ring(15).seal()
        assert ring.is_sealed
        assert ring.sealed_to == ring.top_degree()
        assert ring.dimension(ring.top_degree() + 5) == 0

    def test_sealed_answers_unchanged(self):
        fresh = image_ring(15)
        sealed = image_ring(15).seal()
        for d in range(fresh.top_degree() + 1):
            assert sealed.basis_keys(d) == fresh.basis_keys(d)
        p = g_poly(12) * W3
        assert sealed.normal_form(p) == fresh.normal_form(p)

    def test_infinite_quotient_needs_explicit_range(self):
        free = GradedQuotient(buchberger_reduced([W2 ** 3], IMAGE_TABLE))
        with pytest.raises(SealedRangeError):
            free.seal()
        free.seal(10)
        assert free.dimension(10) == 1
        with pytest.raises(SealedRangeError):
            free.basis_keys(11)
