"""
Verifier service: runs catalog claims in-process or across a process pool
"""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

import structlog

from grasschar import __version__
from grasschar.core.config import SUPPORTED_T_MAX, SUPPORTED_T_MIN, Settings, get_settings
from grasschar.core.exceptions import GrasscharError, UnsupportedParameterError
from grasschar.services.gb_cache import GbCacheStore
from grasschar.services.ring_registry import RingRegistry
from grasschar.verifier.catalog import ClaimDefinition, ParamGrid, catalog, expand_params, get_claim
from grasschar.verifier.claims import ClaimContext, ClaimSkipped, Evidence
from grasschar.verifier.models import ClaimParams, ClaimReport, ClaimStatus, Witness

logger = structlog.get_logger(__name__)

Task = Tuple[str, ClaimParams]


def evaluate(definition: ClaimDefinition, params: ClaimParams, registry: RingRegistry) -> ClaimReport:
    """Run one check and turn its evidence into a report; never raises for claim errors"""
    start = time.perf_counter()
    cap = definition.entry.cap
    if cap is not None and params.t is not None and params.t > cap:
        return ClaimReport(
            claim_id=definition.claim_id,
            params=params,
            status=ClaimStatus.SKIPPED,
            witnesses=[Witness(label="reason", value="cap")],
            duration_ms=0,
        )

    ev = Evidence()
    try:
        definition.check(ClaimContext(registry=registry), params, ev)
        status = ClaimStatus.FAIL if ev.failed else ClaimStatus.PASS
        witnesses = ev.witnesses
    except ClaimSkipped as e:
        status = ClaimStatus.SKIPPED
        witnesses = [Witness(label="reason", value=e.reason)]
    except (GrasscharError, AssertionError, ArithmeticError, LookupError, ValueError) as e:
        logger.warning("Claim raised", claim_id=definition.claim_id, params=params.describe(), error=str(e))
        status = ClaimStatus.FAIL
        witnesses = ev.witnesses + [Witness(label="error", value=f"{type(e).__name__}: {e}")]

    duration_ms = int((time.perf_counter() - start) * 1000)
    logger.info(
        "Claim finished",
        claim_id=definition.claim_id,
        params=params.describe(),
        status=status.value,
        duration_ms=duration_ms,
    )
    return ClaimReport(
        claim_id=definition.claim_id,
        params=params,
        status=status,
        witnesses=witnesses,
        duration_ms=duration_ms,
    )


def build_registry(settings: Settings, use_cache: Optional[bool] = None) -> RingRegistry:
    enabled = settings.CACHE_ENABLED if use_cache is None else use_cache
    cache = GbCacheStore(settings.CACHE_DIR) if enabled else None
    return RingRegistry(cache=cache, verify_cache=settings.VERIFY_CACHE)


class VerifierService:
    """Coordinates claim runs over one ring registry"""

    def __init__(self, settings: Optional[Settings] = None, registry: Optional[RingRegistry] = None):
        self.settings = settings or get_settings()
        self.registry = registry
        self.is_initialized = False
        self.reports_run = 0

    def initialize(self) -> None:
        """Load the catalog and set up the registry"""
        try:
            claims = catalog()
            if self.registry is None:
                self.registry = build_registry(self.settings)
            self.is_initialized = True
            logger.info(
                "Verifier service initialized",
                claims=len(claims),
                cache=str(self.settings.CACHE_DIR) if self.registry.cache else None,
            )
        except Exception as e:
            logger.error("Failed to initialize verifier service", error=str(e))
            raise

    def get_status(self) -> Dict[str, Any]:
        return {
            "version": __version__,
            "initialized": self.is_initialized,
            "claims": len(catalog()),
            "rings_built": len(self.registry) if self.registry else 0,
            "reports_run": self.reports_run,
            "workers_configured": self.settings.VERIFY_WORKERS,
            "cache_dir": str(self.settings.CACHE_DIR),
        }

    def shutdown(self) -> None:
        logger.info("Verifier service shut down", reports_run=self.reports_run)
        self.is_initialized = False

    def _ensure(self) -> None:
        if not self.is_initialized:
            self.initialize()

    def run_claim(self, claim_id: str, params: Optional[ClaimParams] = None) -> ClaimReport:
        self._ensure()
        definition = get_claim(claim_id)
        params = params or ClaimParams()
        if definition.entry.grid is not ParamGrid.GLOBAL:
            if params.t is None or not SUPPORTED_T_MIN <= params.t <= SUPPORTED_T_MAX:
                raise UnsupportedParameterError(
                    f"{claim_id} needs t in {SUPPORTED_T_MIN}..{SUPPORTED_T_MAX}, got {params.t}"
                )
        report = evaluate(definition, params, self.registry)
        self.reports_run += 1
        return report

    def plan(self, t_min: int, t_max: int, claim_ids: Optional[Iterable[str]] = None) -> List[Task]:
        ids = sorted(set(claim_ids)) if claim_ids else sorted(catalog())
        tasks: List[Task] = []
        for claim_id in ids:
            definition = get_claim(claim_id)
            tasks.extend((claim_id, params) for params in expand_params(definition.entry, t_min, t_max))
        return tasks

    def run_all(
        self,
        t_min: int,
        t_max: int,
        claim_ids: Optional[Iterable[str]] = None,
        workers: Optional[int] = None,
        progress: Optional[Callable[[ClaimReport], None]] = None,
    ) -> List[ClaimReport]:
        """Every (claim, parameter) pair for t in t_min..t_max, sorted by claim id and parameters"""
        self._ensure()
        tasks = self.plan(t_min, t_max, claim_ids)
        workers = workers or self.settings.VERIFY_WORKERS
        logger.info("Verification started", tasks=len(tasks), t_min=t_min, t_max=t_max, workers=workers)

        reports: List[ClaimReport] = []
        if workers <= 1 or len(tasks) <= 1:
            for claim_id, params in tasks:
                report = evaluate(get_claim(claim_id), params, self.registry)
                reports.append(report)
                if progress:
                    progress(report)
        else:
            reports = self._run_parallel(tasks, workers, progress)

        self.reports_run += len(reports)
        reports.sort(key=lambda r: r.sort_key())
        failed = sum(r.status is ClaimStatus.FAIL for r in reports)
        logger.info("Verification finished", reports=len(reports), failed=failed)
        return reports

    def _run_parallel(
        self,
        tasks: List[Task],
        workers: int,
        progress: Optional[Callable[[ClaimReport], None]],
    ) -> List[ClaimReport]:
        from grasschar import worker

        cache = self.registry.cache if self.registry else None
        initargs = (
            str(cache.cache_dir) if cache else None,
            self.registry.verify_cache if self.registry else False,
            self.settings.LOG_LEVEL,
            self.settings.LOG_FORMAT,
        )
        reports = []
        with ProcessPoolExecutor(max_workers=workers, initializer=worker.init_worker, initargs=initargs) as pool:
            futures = [
                pool.submit(worker.run_task, claim_id, params.model_dump_json())
                for claim_id, params in tasks
            ]
            for future in as_completed(futures):
                report = ClaimReport.model_validate_json(future.result())
                reports.append(report)
                if progress:
                    progress(report)
        return reports


def run_claim(claim_id: str, params: Optional[ClaimParams] = None) -> ClaimReport:
    service = VerifierService()
    return service.run_claim(claim_id, params)


def run_all(t_min: int, t_max: int) -> List[ClaimReport]:
    if not SUPPORTED_T_MIN <= t_min <= t_max <= SUPPORTED_T_MAX:
        raise UnsupportedParameterError(f"t range must satisfy 3 <= t_min <= t_max <= 8, got {t_min}..{t_max}")
    return VerifierService().run_all(t_min, t_max)
