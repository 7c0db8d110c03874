"""
On-disk cache of reduced Groebner bases, fingerprinted with xxhash
"""

import os
import shutil
import tempfile
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import structlog
import xxhash

from grasschar.algebra.gf2poly import PolyGF2, VariableTable
from grasschar.algebra.groebner import GroebnerBasis, parse_basis
from grasschar.core.exceptions import CacheMismatchError, GrasscharError
from grasschar.rings.builders import compute_basis, presentation_for_key

logger = structlog.get_logger(__name__)

IDEAL_HEADER = "ideal"


def ideal_fingerprint(table: VariableTable, generators: Sequence[PolyGF2]) -> str:
    """xxh64 of the table header and the sorted printed generators"""
    hasher = xxhash.xxh64()
    hasher.update(table.header().encode("utf-8"))
    for text in sorted(str(g) for g in generators if g):
        hasher.update(b"\n")
        hasher.update(text.encode("utf-8"))
    return hasher.hexdigest()


class GbCacheStore:
    """Text files gb/<key>.txt under the cache directory"""

    def __init__(self, cache_dir: Path):
        self.cache_dir = Path(cache_dir)
        self.gb_dir = self.cache_dir / "gb"

    def path(self, key: str) -> Path:
        return self.gb_dir / f"{key}.txt"

    def keys(self) -> List[str]:
        if not self.gb_dir.is_dir():
            return []
        return sorted(p.stem for p in self.gb_dir.glob("*.txt"))

    def load(self, key: str, fingerprint: str) -> Optional[GroebnerBasis]:
        """
        Read a cached basis

        Args:
            key: ring key such as borel_n7_k3
            fingerprint: expected ideal fingerprint

        Returns:
            The basis, or None on a miss, a stale entry or an unreadable file
        """
        path = self.path(key)
        if not path.is_file():
            logger.debug("Cache miss", key=key)
            return None
        try:
            basis, headers = parse_basis(path.read_text(encoding="utf-8"))
        except (OSError, GrasscharError, ValueError) as e:
            logger.warning("Unreadable cache entry ignored", key=key, error=str(e))
            return None
        if headers.get(IDEAL_HEADER) != fingerprint:
            logger.info("Stale cache entry ignored", key=key)
            return None
        if not all(p.is_homogeneous() for p in basis.elements) or not basis.is_reduced():
            logger.warning("Malformed cache entry ignored", key=key)
            return None
        logger.debug("Cache hit", key=key, elements=len(basis))
        return basis

    def render(self, gb: GroebnerBasis, fingerprint: str) -> str:
        return gb.serialize({IDEAL_HEADER: fingerprint})

    def store(self, key: str, gb: GroebnerBasis, fingerprint: str) -> Path:
        """Atomic write: temporary file in the same directory, then os.replace"""
        self.gb_dir.mkdir(parents=True, exist_ok=True)
        target = self.path(key)
        fd, tmp = tempfile.mkstemp(dir=self.gb_dir, prefix=f".{key}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                f.write(self.render(gb, fingerprint))
            os.replace(tmp, target)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        logger.debug("Cache entry written", key=key, path=str(target))
        return target

    def clear(self) -> int:
        count = len(self.keys())
        if self.gb_dir.exists():
            shutil.rmtree(self.gb_dir)
        logger.info("Cache cleared", entries=count, path=str(self.gb_dir))
        return count

    def verify_entry(self, key: str) -> None:
        """Recompute one entry and byte-compare; raises CacheMismatchError"""
        presentation = presentation_for_key(key)
        if presentation is None:
            raise CacheMismatchError(key, "key does not name a known ring")
        fingerprint = ideal_fingerprint(presentation.table, presentation.generators)
        expected = self.render(compute_basis(presentation), fingerprint)
        actual = self.path(key).read_text(encoding="utf-8")
        if actual != expected:
            raise CacheMismatchError(key)

    def verify_all(self) -> Dict[str, Optional[str]]:
        """Map every cached key to None when it matches a recomputation, else the error"""
        results: Dict[str, Optional[str]] = {}
        for key in self.keys():
            try:
                self.verify_entry(key)
                results[key] = None
            except (CacheMismatchError, GrasscharError, OSError) as e:
                logger.warning("Cache entry failed verification", key=key, error=str(e))
                results[key] = str(e)
        return results
