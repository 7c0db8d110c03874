"""
Process-pool worker for parallel claim runs

Each worker process owns a ring registry; workers share only the on-disk basis cache.
"""

from pathlib import Path
from typing import Optional

import structlog

from grasschar.core.logging import configure_logging
from grasschar.services.gb_cache import GbCacheStore
from grasschar.services.ring_registry import RingRegistry
from grasschar.services.verifier_service import evaluate
from grasschar.verifier.catalog import get_claim
from grasschar.verifier.models import ClaimParams

logger = structlog.get_logger(__name__)

_registry: Optional[RingRegistry] = None


def init_worker(cache_dir: Optional[str], verify_cache: bool, log_level: str, log_format: str) -> None:
    """Pool initializer: logging plus a fresh registry for this process"""
    global _registry
    configure_logging(log_level, log_format)
    cache = GbCacheStore(Path(cache_dir)) if cache_dir else None
    _registry = RingRegistry(cache=cache, verify_cache=verify_cache)
    logger.debug("Worker initialized", cache_dir=cache_dir)


def run_task(claim_id: str, params_json: str) -> str:
    """Evaluate one claim and return the report as JSON"""
    global _registry
    if _registry is None:
        _registry = RingRegistry()
    params = ClaimParams.model_validate_json(params_json)
    report = evaluate(get_claim(claim_id), params, _registry)
    return report.model_dump_json()
