"""Tests for GF(2) bit matrices"""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from grasschar.algebra.linalg import BitMatrix, matrix_kernel_basis, row_reduce, vector_to_mask


def dense_matrices(max_rows: int = 9, max_cols: int = 12):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


class TestBitMatrix:
    def test_dense_roundtrip_and_indexing(self):
        m = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
        assert m.shape == (2, 3)
        assert m[0, 2] == 1 and m[1, 0] == 0
        np.testing.assert_array_equal(m.to_dense(), [[1, 0, 1], [0, 1, 1]])

    def test_from_columns_uses_low_bit_for_first_row(self):
        m = BitMatrix.from_columns([0b01, 0b10, 0b11], rows=2)
        assert m == BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]])

    def test_wide_rows_pack_past_one_byte(self):
        row = [0] * 19
        row[17] = 1
        m = BitMatrix.from_rows([row])
        assert m[0, 17] == 1
        assert m.rank() == 1

    def test_product_and_transpose(self):
        a = BitMatrix.from_rows([[1, 1], [0, 1]])
        assert a @ a == BitMatrix.identity(2)
        assert a.transpose() == BitMatrix.from_rows([[1, 0], [1, 1]])

    def test_empty_shapes(self):
        m = BitMatrix.from_columns([], rows=3)
        assert m.shape == (3, 0)
        assert m.rank() == 0
        assert matrix_kernel_basis(m) == []
        zero_rows = BitMatrix.from_columns([0, 0], rows=0)
        assert zero_rows.is_zero()
        assert len(matrix_kernel_basis(zero_rows)) == 2

    def test_vstack_shape_check(self):
        with pytest.raises(ValueError):
            BitMatrix.zeros(1, 2).vstack(BitMatrix.zeros(1, 3))


class TestKernel:
    def test_identity_is_injective(self):
        assert matrix_kernel_basis(BitMatrix.identity(3)) == []

    def test_zero_map(self):
        assert len(matrix_kernel_basis(BitMatrix.zeros(2, 3))) == 3

    def test_rank_one(self):
        kernel = matrix_kernel_basis(BitMatrix.from_rows([[1, 1], [0, 0]]))
        assert len(kernel) == 1
        np.testing.assert_array_equal(kernel[0], [1, 1])

    @given(dense_matrices())
    def test_rank_nullity_and_annihilation(self, rows):
        m = BitMatrix.from_rows(rows)
        kernel = matrix_kernel_basis(m)
        assert m.rank() + len(kernel) == m.cols
        for v in kernel:
            assert not m.apply(v).any()
        if kernel:
            assert row_reduce(np.array(kernel)).rank == len(kernel)

    @given(dense_matrices())
    def test_transpose_keeps_rank(self, rows):
        m = BitMatrix.from_rows(rows)
        assert m.rank() == m.transpose().rank()


class TestRowReduce:
    def test_echelon_form(self):
        result = row_reduce(np.array([[0, 1, 1], [1, 1, 0], [1, 0, 1]]))
        assert result.rank == 2
        assert result.pivots == (0, 1)
        np.testing.assert_array_equal(result.matrix[:2], [[1, 0, 1], [0, 1, 1]])

    def test_vector_to_mask(self):
        assert vector_to_mask([1, 0, 1, 1]) == 0b1101
        assert vector_to_mask([]) == 0
