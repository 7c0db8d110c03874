"""Tests for packed monomials, GF(2) polynomial arithmetic and the text format"""

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from grasschar.algebra.gf2poly import (
    MAX_EXPONENT,
    Comparison,
    PolyGF2,
    VariableTable,
    coeff_of,
    lucas_binom,
    mono_compare,
    parse_poly,
    poly_add,
    poly_mul,
    poly_pow,
    print_poly,
)
from grasschar.core.exceptions import (
    AlignmentError,
    ExponentOverflowError,
    PolynomialParseError,
    UnknownVariableError,
    VariableTableError,
)
from grasschar.rings.families import IMAGE_TABLE, borel_table, g_poly, oriented_table, wbar

W = borel_table(3)
W2 = PolyGF2.variable(IMAGE_TABLE, "w2")
W3 = PolyGF2.variable(IMAGE_TABLE, "w3")


def polys(table: VariableTable, max_exponent: int = 6, max_terms: int = 6):
    vectors = st.tuples(*[st.integers(0, max_exponent) for _ in range(table.size)])
    return st.lists(vectors, max_size=max_terms).map(lambda vs: PolyGF2.from_exponents(table, vs))


class TestLucasBinom:
    @staticmethod
    def assert_pascal_rows(up_to: int):
        row = [1]
        for n in range(up_to + 1):
            assert [lucas_binom(n, k) for k in range(n + 1)] == row, n
            row = [1] + [a ^ b for a, b in zip(row, row[1:])] + [1]

    def test_pascal_triangle(self):
        self.assert_pascal_rows(256)

    @pytest.mark.slow
    def test_pascal_triangle_to_4096(self):
        self.assert_pascal_rows(4096)

    @given(st.integers(0, 4096), st.integers(0, 4096))
    def test_matches_exact_binomial(self, n, k):
        assert lucas_binom(n, k) == comb(n, k) % 2

    def test_examples(self):
        assert lucas_binom(7, 1) * lucas_binom(6, 2) == 1
        assert lucas_binom(2, 1) == 0
        assert lucas_binom(12345, 0) == 1
        for t in range(3, 9):
            assert lucas_binom(2 ** t - 5, 2 ** t - 6) == 1

    def test_k_above_n(self):
        assert lucas_binom(3, 5) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            lucas_binom(-1, 0)


class TestVariableTable:
    def test_rejects_duplicates_and_bad_degrees(self):
        with pytest.raises(VariableTableError):
            VariableTable.of(("x", 1), ("x", 2))
        with pytest.raises(VariableTableError):
            VariableTable.of(("x", 0))
        with pytest.raises(VariableTableError):
            VariableTable.of()

    def test_header_roundtrip(self):
        table = oriented_table(4)
        assert table.header() == "a:12,w2:2,w3:3"
        assert VariableTable.from_header(table.header()) == table

    def test_pack_unpack(self):
        key = W.pack((3, 0, 7))
        assert W.unpack(key) == (3, 0, 7)
        assert W.degree_of(key) == 3 + 21

    def test_exponent_bound(self):
        W.pack((MAX_EXPONENT, 0, 0))
        with pytest.raises(ExponentOverflowError):
            W.pack((MAX_EXPONENT + 1, 0, 0))

    def test_product_overflow(self):
        big = PolyGF2.from_exponents(IMAGE_TABLE, [(MAX_EXPONENT, 0)])
        with pytest.raises(ExponentOverflowError):
            big * W2
        with pytest.raises(ExponentOverflowError):
            big.square()

    @given(
        st.tuples(st.integers(0, 40), st.integers(0, 40), st.integers(0, 40)),
        st.tuples(st.integers(0, 40), st.integers(0, 40), st.integers(0, 40)),
    )
    def test_divides_matches_componentwise(self, a, b):
        expected = all(x <= y for x, y in zip(a, b))
        assert W.divides(W.pack(a), W.pack(b)) == expected

    @given(
        st.tuples(st.integers(0, 40), st.integers(0, 40), st.integers(0, 40)),
        st.tuples(st.integers(0, 40), st.integers(0, 40), st.integers(0, 40)),
    )
    def test_key_order_is_lex(self, a, b):
        assert (W.pack(a) > W.pack(b)) == (a > b)

    def test_monomials_of_degree(self):
        keys = IMAGE_TABLE.monomials_of_degree(6)
        assert [IMAGE_TABLE.unpack(k) for k in keys] == [(3, 0), (0, 2)]
        assert IMAGE_TABLE.monomials_of_degree(1) == ()
        assert len(W.monomials_of_degree(6)) == 7


class TestMonoCompare:
    def test_first_exponent_decides(self):
        m1 = IMAGE_TABLE.monomial(w2=2, w3=1)
        m2 = IMAGE_TABLE.monomial(w2=1, w3=3)
        assert mono_compare(IMAGE_TABLE, m1, m2) is Comparison.GREATER
        assert mono_compare(IMAGE_TABLE, m2, m1) is Comparison.LESS
        assert mono_compare(IMAGE_TABLE, m1, m1) is Comparison.EQUAL

    def test_priority_beats_degree(self):
        table = oriented_table(3)
        assert mono_compare(table, table.monomial(a=1), table.monomial(w2=10)) is Comparison.GREATER

    def test_mismatched_table(self):
        with pytest.raises(AlignmentError):
            mono_compare(IMAGE_TABLE, W.monomial(w1=1), IMAGE_TABLE.monomial(w2=1))


class TestArithmetic:
    @given(polys(IMAGE_TABLE))
    def test_characteristic_two(self, p):
        assert not (p + p)
        assert p + PolyGF2.zero(IMAGE_TABLE) == p

    @given(polys(IMAGE_TABLE), polys(IMAGE_TABLE), polys(IMAGE_TABLE))
    @settings(max_examples=60)
    def test_ring_laws(self, p, q, r):
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(polys(IMAGE_TABLE))
    def test_frobenius(self, p):
        assert p.square() == p * p
        assert p ** 4 == p * p * p * p

    @given(polys(W, max_exponent=4), st.integers(0, 7))
    @settings(max_examples=40)
    def test_pow_matches_repeated_product(self, p, e):
        expected = PolyGF2.one(W)
        for _ in range(e):
            expected = expected * p
        assert poly_pow(p, e) == expected

    def test_examples(self):
        assert poly_add(W2 ** 3 + W3 ** 2, W2 ** 3) == W3 ** 2
        assert poly_mul(W3, g_poly(4)) == g_poly(7)
        assert (W2 + W3) * (W2 + W3) == W2 ** 2 + W3 ** 2
        assert PolyGF2.one(IMAGE_TABLE) * g_poly(6) == g_poly(6)
        assert (W2 ** 2) ** 2 == W2 ** 4
        assert g_poly(12) == W2 ** 6 + W3 ** 4
        assert g_poly(12) ** 2 == W2 ** 12 + W3 ** 8

    def test_mixed_tables(self):
        with pytest.raises(AlignmentError):
            W2 + PolyGF2.variable(W, "w2")

    def test_immutable(self):
        with pytest.raises(AttributeError):
            W2.table = W

    def test_leading_monomial_and_degree(self):
        p = g_poly(6)
        assert p.leading_monomial() == IMAGE_TABLE.monomial(w2=3)
        assert p.degree() == 6
        assert p.is_homogeneous()
        assert PolyGF2.zero(IMAGE_TABLE).degree() is None
        assert not (W2 + W3 ** 2).is_homogeneous()

    def test_coefficients_of_wbar(self):
        for t in (3, 4, 5):
            h = 2 ** (t - 1)
            assert coeff_of(wbar(2 ** t - 2), W.monomial(w2=h - 1)) == 1
            assert coeff_of(wbar(2 ** t - 3), W.monomial(w1=2 ** t - 3)) == 1
        assert coeff_of(wbar(13), W.monomial(w1=3, w2=5)) == 0

    def test_substitute_sets_w1_to_zero(self):
        images = {"w1": PolyGF2.zero(IMAGE_TABLE)}
        assert wbar(6).substitute(images, IMAGE_TABLE) == g_poly(6)


class TestParsePrint:
    def test_parse_examples(self):
        assert parse_poly("w2^3 + w3^2", IMAGE_TABLE) == W2 ** 3 + W3 ** 2
        assert parse_poly("0", IMAGE_TABLE) == PolyGF2.zero(IMAGE_TABLE)
        assert not parse_poly("w2*w3 + w2*w3", IMAGE_TABLE)
        assert parse_poly("1", IMAGE_TABLE) == PolyGF2.one(IMAGE_TABLE)
        assert parse_poly("w3 * w2^2", IMAGE_TABLE) == g_poly(7)

    def test_print_examples(self):
        assert print_poly(PolyGF2.zero(IMAGE_TABLE)) == "0"
        assert print_poly(g_poly(6)) == "w2^3 + w3^2"
        assert print_poly(PolyGF2.one(IMAGE_TABLE)) == "1"
        assert str(g_poly(7)) == "w2^2*w3"

    @given(polys(oriented_table(3)))
    def test_printed_form_parses_back(self, p):
        assert parse_poly(print_poly(p), p.table) == p

    def test_unknown_variable_position(self):
        with pytest.raises(UnknownVariableError) as info:
            parse_poly("w2 + w4", IMAGE_TABLE)
        assert info.value.position == 5
        assert info.value.name == "w4"

    def test_syntax_errors(self):
        for text in ("w2 +", "w2^", "w2 ** 2", "2*w2", "w2 - w3"):
            with pytest.raises(PolynomialParseError):
                parse_poly(text, IMAGE_TABLE)

    def test_exponent_overflow(self):
        with pytest.raises(ExponentOverflowError):
            parse_poly("w2^70000", IMAGE_TABLE)
