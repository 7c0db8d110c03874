"""
Process-wide memo of sealed rings, backed by the Groebner-basis cache
"""

from types import MappingProxyType
from typing import Dict, Mapping, Optional

import structlog

from grasschar.algebra.groebner import GroebnerBasis
from grasschar.algebra.quotient import GradedQuotient
from grasschar.core.exceptions import CacheMismatchError
from grasschar.rings.builders import (
    GrassmannParams,
    Presentation,
    borel_presentation,
    build_ring,
    compute_basis,
    image_presentation,
    oriented_k2_presentation,
    oriented_presentation,
)
from grasschar.services.gb_cache import GbCacheStore, ideal_fingerprint

logger = structlog.get_logger(__name__)


class RingRegistry:
    """Builds each ring once, seals it to its top degree and hands out the shared value"""

    def __init__(self, cache: Optional[GbCacheStore] = None, verify_cache: bool = False):
        self.cache = cache
        self.verify_cache = verify_cache
        self._rings: Dict[str, GradedQuotient] = {}
        self._bases: Dict[str, GroebnerBasis] = {}
        self.stats = {"built": 0, "cache_hits": 0, "cache_writes": 0}

    def __len__(self) -> int:
        return len(self._rings)

    @property
    def rings(self) -> Mapping[str, GradedQuotient]:
        return MappingProxyType(self._rings)

    def borel(self, n: int, k: int) -> GradedQuotient:
        return self.get(borel_presentation(n, k))

    def image(self, n: int) -> GradedQuotient:
        return self.get(image_presentation(n))

    def oriented(self, params: GrassmannParams) -> GradedQuotient:
        return self.get(oriented_presentation(params))

    def oriented_k2(self, t: int) -> GradedQuotient:
        return self.get(oriented_k2_presentation(t))

    def get(self, presentation: Presentation) -> GradedQuotient:
        ring = self._rings.get(presentation.key)
        if ring is None:
            ring = build_ring(presentation, self.basis(presentation)).seal()
            self._rings[presentation.key] = ring
            logger.info(
                "Ring built",
                ring=presentation.label,
                key=presentation.key,
                top_degree=ring.sealed_to,
                dimension=ring.total_dimension(),
            )
        return ring

    def basis(self, presentation: Presentation) -> GroebnerBasis:
        """Reduced basis only, without building and sealing the quotient"""
        gb = self._bases.get(presentation.key)
        if gb is None:
            gb = self._load_or_compute(presentation)
            self._bases[presentation.key] = gb
        return gb

    def _load_or_compute(self, presentation: Presentation) -> GroebnerBasis:
        if self.cache is None:
            self.stats["built"] += 1
            return compute_basis(presentation)

        fingerprint = ideal_fingerprint(presentation.table, presentation.generators)
        cached = self.cache.load(presentation.key, fingerprint)
        if cached is not None and not self.verify_cache:
            self.stats["cache_hits"] += 1
            return cached

        gb = compute_basis(presentation)
        self.stats["built"] += 1
        if cached is not None:
            if self.cache.render(cached, fingerprint) != self.cache.render(gb, fingerprint):
                logger.error("Cached basis differs from recomputation", key=presentation.key)
                raise CacheMismatchError(presentation.key)
            self.stats["cache_hits"] += 1
            return gb

        try:
            self.cache.store(presentation.key, gb, fingerprint)
            self.stats["cache_writes"] += 1
        except OSError as e:
            logger.warning("Could not write cache entry", key=presentation.key, error=str(e))
        return gb
