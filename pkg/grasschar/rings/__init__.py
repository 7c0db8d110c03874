"""
Grassmannian cohomology rings: families, presentations, maps and Gysin bookkeeping
"""

from grasschar.rings.builders import (
    GrassmannParams,
    borel_ring,
    image_ring,
    oriented_ring,
    oriented_ring_k2,
)
from grasschar.rings.families import fukaya_family, g_poly, wbar
from grasschar.rings.gysin import gysin_dims
from grasschar.rings.maps import GradedLinearMap, kernel_intersection, mult_w1, restriction_map

__all__ = [
    "GradedLinearMap",
    "GrassmannParams",
    "borel_ring",
    "fukaya_family",
    "g_poly",
    "gysin_dims",
    "image_ring",
    "kernel_intersection",
    "mult_w1",
    "oriented_ring",
    "oriented_ring_k2",
    "restriction_map",
    "wbar",
]
