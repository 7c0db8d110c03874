"""
GF(2) matrices with bit-packed row storage, rank and right null spaces
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class RowReduceResult:
    matrix: np.ndarray
    rank: int
    pivots: Tuple[int, ...]


def row_reduce(dense: np.ndarray) -> RowReduceResult:
    """Reduced row echelon form over GF(2)"""
    mat = (np.asarray(dense, dtype=np.uint8) % 2).copy()
    m, n = mat.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        hits = mat[:, col].astype(bool)
        hits[row] = False
        mat[hits] ^= mat[row]
        pivots.append(col)
        row += 1
    return RowReduceResult(matrix=mat, rank=row, pivots=tuple(pivots))


class BitMatrix:
    """Immutable GF(2) matrix; rows are packed with numpy.packbits"""

    __slots__ = ("rows", "cols", "_bits")

    def __init__(self, rows: int, cols: int, bits: np.ndarray):
        self.rows = rows
        self.cols = cols
        self._bits = bits
        self._bits.setflags(write=False)

    @classmethod
    def from_dense(cls, dense) -> "BitMatrix":
        arr = np.asarray(dense, dtype=np.uint8) % 2
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        rows, cols = arr.shape
        return cls(rows, cols, np.packbits(arr, axis=1))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BitMatrix":
        if not rows:
            return cls.zeros(0, cols or 0)
        return cls.from_dense(np.array(rows, dtype=np.uint8))

    @classmethod
    def from_columns(cls, masks: Sequence[int], rows: int) -> "BitMatrix":
        """Column j is the coefficient mask masks[j]; bit i of the mask is row i"""
        dense = np.zeros((rows, len(masks)), dtype=np.uint8)
        for j, mask in enumerate(masks):
            i = 0
            while mask:
                if mask & 1:
                    dense[i, j] = 1
                mask >>= 1
                i += 1
        return cls.from_dense(dense)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls.from_dense(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_dense(self) -> np.ndarray:
        if self.cols == 0:
            return np.zeros((self.rows, 0), dtype=np.uint8)
        return np.unpackbits(self._bits, axis=1, count=self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return int(self._bits[i, j // 8] >> (7 - j % 8) & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.to_dense(), other.to_dense())

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols}, rank={self.rank()})"

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise ValueError(f"cannot stack {self.shape} on {other.shape}")
        return BitMatrix.from_dense(np.vstack([self.to_dense(), other.to_dense()]))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        product = self.to_dense().astype(np.int64) @ other.to_dense().astype(np.int64)
        return BitMatrix.from_dense(product % 2)

    def apply(self, vector: Iterable[int]) -> np.ndarray:
        vec = np.asarray(list(vector), dtype=np.int64)
        return (self.to_dense().astype(np.int64) @ vec % 2).astype(np.uint8)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return row_reduce(self.to_dense()).rank

    def is_zero(self) -> bool:
        return not self._bits.any()


def matrix_kernel_basis(m: BitMatrix) -> List[np.ndarray]:
    """Basis of the right null space {v : m v = 0}; empty iff m is injective"""
    if m.rows == 0:
        return [np.eye(m.cols, dtype=np.uint8)[j] for j in range(m.cols)]
    reduced = row_reduce(m.to_dense())
    pivot_set = set(reduced.pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = np.zeros(m.cols, dtype=np.uint8)
        v[free] = 1
        for r, pivot in enumerate(reduced.pivots):
            v[pivot] = reduced.matrix[r, free]
        basis.append(v)
    return basis


def vector_to_mask(vector: Sequence[int]) -> int:
    mask = 0
    for i, bit in enumerate(vector):
        if bit:
            mask |= 1 << i
    return mask
