"""
Mod-2 Betti numbers of oriented Grassmannians from the Gysin sequence of the double cover

dim H^r(G~) = dim H^r(G) - rank(w1 on degree r-1) + dim ker(w1 on degree r)
"""

from typing import List, Optional

import structlog

from grasschar.algebra.quotient import GradedQuotient
from grasschar.rings.builders import borel_ring
from grasschar.rings.maps import mult_w1

logger = structlog.get_logger(__name__)


def gysin_dims_for(ring: GradedQuotient, up_to: int) -> List[int]:
    if up_to < 0:
        raise ValueError("up_to must be non-negative")
    w1 = mult_w1(ring)
    ranks = [w1.rank(d) for d in range(up_to + 1)]
    dims = []
    for r in range(up_to + 1):
        dim_r = ring.dimension(r)
        image_in = ranks[r - 1] if r > 0 else 0
        kernel_out = dim_r - ranks[r]
        dims.append(dim_r - image_in + kernel_out)
    return dims


def gysin_dims(n: int, k: int, up_to: int, ring: Optional[GradedQuotient] = None) -> List[int]:
    """Predicted Betti numbers of G~_{n,k} for degrees 0..up_to"""
    ring = ring if ring is not None else borel_ring(n, k)
    dims = gysin_dims_for(ring, up_to)
    logger.debug("Gysin dimensions computed", n=n, k=k, up_to=up_to, total=sum(dims))
    return dims
