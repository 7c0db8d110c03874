"""
Graded linear maps between quotients, realized degree by degree as BitMatrix
"""

from enum import Enum
from typing import Dict, List, Mapping, Optional

import structlog

from grasschar.algebra.gf2poly import PolyGF2
from grasschar.algebra.linalg import BitMatrix, matrix_kernel_basis, vector_to_mask
from grasschar.algebra.quotient import GradedQuotient
from grasschar.core.exceptions import AlignmentError, SealedRangeError, VariableTableError

logger = structlog.get_logger(__name__)


class MapKind(str, Enum):
    RING_HOM = "ring-hom"
    MULTIPLICATION = "multiplication"


class GradedLinearMap:
    """Matrix at degree d: one column per source standard monomial of degree d, one row
    per target standard monomial of degree d + degree_shift"""

    def __init__(
        self,
        source: GradedQuotient,
        target: GradedQuotient,
        kind: MapKind,
        images: Optional[Mapping[str, PolyGF2]] = None,
        multiplier: Optional[PolyGF2] = None,
        label: str = "",
    ):
        self.source = source
        self.target = target
        self.kind = kind
        self.images: Dict[str, PolyGF2] = dict(images or {})
        self.multiplier = multiplier
        self.label = label or kind.value
        self._matrices: Dict[int, BitMatrix] = {}
        self._sealed_to: Optional[int] = None

        if kind is MapKind.MULTIPLICATION:
            if multiplier is None or not multiplier.is_homogeneous() or not multiplier:
                raise ValueError("multiplication maps need a nonzero homogeneous multiplier")
            if source.table != target.table or multiplier.table != target.table:
                raise AlignmentError("multiplication map between different rings")
            self.degree_shift = multiplier.degree()
        else:
            self.degree_shift = 0
            for name, image in self.images.items():
                if image.table != target.table:
                    raise AlignmentError(f"image of {name} is not over {target.table.header()}")
                degree = source.table.degrees[source.table.index(name)]
                if image and (not image.is_homogeneous() or image.degree() != degree):
                    raise AlignmentError(f"image of {name} does not have degree {degree}")

    def __repr__(self) -> str:
        return f"GradedLinearMap({self.label!r}: {self.source.name} -> {self.target.name})"

    def apply(self, p: PolyGF2) -> PolyGF2:
        """Image of p as a normal form in the target"""
        if p.table != self.source.table:
            raise AlignmentError(f"{self.label} applied to a polynomial over {p.table.header()}")
        if self.kind is MapKind.MULTIPLICATION:
            return self.target.normal_form(p * self.multiplier)
        return self.target.normal_form(p.substitute(self.images, self.target.table))

    def matrix(self, degree: int) -> BitMatrix:
        cached = self._matrices.get(degree)
        if cached is not None:
            return cached
        if self._sealed_to is not None and degree > self._sealed_to:
            raise SealedRangeError(f"{self.label}: degree {degree} above the sealed range")
        source_basis = self.source.basis_keys(degree)
        target_degree = degree + self.degree_shift
        rows = self.target.dimension(target_degree)
        columns = []
        for key in source_basis:
            image = self.apply(PolyGF2(self.source.table, frozenset((key,))))
            columns.append(self.target.coordinates(image, target_degree))
        result = BitMatrix.from_columns(columns, rows)
        self._matrices[degree] = result
        logger.debug("Map matrix built", map=self.label, degree=degree, shape=result.shape)
        return result

    def rank(self, degree: int) -> int:
        return self.matrix(degree).rank()

    def kernel(self, degree: int) -> List[PolyGF2]:
        return [
            self.source.element(vector_to_mask(v), degree)
            for v in matrix_kernel_basis(self.matrix(degree))
        ]

    def seal(self, up_to: int) -> "GradedLinearMap":
        for d in range(up_to + 1):
            self.matrix(d)
        self._sealed_to = up_to
        return self


def restriction_map(kind: str, source: GradedQuotient, target: GradedQuotient) -> GradedLinearMap:
    """i-star keeps every generator; j-star also sends the one generator missing from
    the target to zero"""
    if kind not in ("i-star", "j-star"):
        raise ValueError(f"restriction kind must be i-star or j-star, got {kind!r}")
    images: Dict[str, PolyGF2] = {}
    missing = []
    for name, degree in source.table.vars:
        if target.table.has(name):
            if target.table.degrees[target.table.index(name)] != degree:
                raise AlignmentError(f"generator {name} has different degrees in source and target")
            images[name] = PolyGF2.variable(target.table, name)
        else:
            missing.append(name)
            images[name] = PolyGF2.zero(target.table)
    if kind == "i-star" and missing:
        raise AlignmentError(f"i-star target lacks generators {missing}")
    if kind == "j-star" and len(missing) != 1:
        raise AlignmentError(f"j-star drops exactly one generator, found {missing}")
    return GradedLinearMap(source, target, MapKind.RING_HOM, images=images, label=kind)


def mult_w1(ring: GradedQuotient) -> GradedLinearMap:
    if not ring.table.has("w1"):
        raise VariableTableError(f"{ring.name} has no variable w1")
    w1 = PolyGF2.variable(ring.table, "w1")
    return GradedLinearMap(ring, ring, MapKind.MULTIPLICATION, multiplier=w1, label="w1")


def kernel_intersection(f: GradedLinearMap, g: GradedLinearMap, degree: int) -> List[PolyGF2]:
    """Basis of ker f_degree and ker g_degree intersected, as normal forms in the source"""
    if f.source is not g.source and (
        f.source.table != g.source.table or f.source.gb != g.source.gb
    ):
        raise AlignmentError("kernel intersection of maps with different sources")
    stacked = f.matrix(degree).vstack(g.matrix(degree))
    return [f.source.element(vector_to_mask(v), degree) for v in matrix_kernel_basis(stacked)]
