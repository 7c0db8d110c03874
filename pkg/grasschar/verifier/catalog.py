"""
Claim catalog: checks registered by decorator, joined with the shipped manifest
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Optional

import structlog

from grasschar.core.exceptions import UnknownClaimError, UnsupportedParameterError
from grasschar.verifier.models import ClaimParams

logger = structlog.get_logger(__name__)

MANIFEST_PATH = Path(__file__).with_name("claims_manifest.tsv")


class ParamGrid(str, Enum):
    GLOBAL = "global"
    PER_T = "t"
    CASES = "cases"
    GAMMA = "gamma"


@dataclass(frozen=True)
class ManifestEntry:
    claim_id: str
    grid: ParamGrid
    cap: Optional[int]
    reference: str
    statement: str


@dataclass(frozen=True)
class ClaimDefinition:
    entry: ManifestEntry
    check: Callable

    @property
    def claim_id(self) -> str:
        return self.entry.claim_id


_CHECKS: Dict[str, Callable] = {}


def claim(claim_id: str) -> Callable[[Callable], Callable]:
    def register(func: Callable) -> Callable:
        if claim_id in _CHECKS:
            raise ValueError(f"claim {claim_id} registered twice")
        _CHECKS[claim_id] = func
        return func

    return register


def registered_checks() -> Dict[str, Callable]:
    import grasschar.verifier.claims  # noqa: F401  (registers the checks)

    return dict(_CHECKS)


def load_manifest(path: Path = MANIFEST_PATH) -> Dict[str, ManifestEntry]:
    entries: Dict[str, ManifestEntry] = {}
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise ValueError(f"{path.name}:{number}: expected 5 tab-separated fields")
        claim_id, grid, cap, reference, statement = fields
        if not reference.strip():
            raise ValueError(f"{path.name}:{number}: claim {claim_id} has no source reference")
        entries[claim_id] = ManifestEntry(
            claim_id=claim_id,
            grid=ParamGrid(grid),
            cap=None if cap == "-" else int(cap),
            reference=reference,
            statement=statement,
        )
    return entries


@lru_cache(maxsize=1)
def catalog() -> Dict[str, ClaimDefinition]:
    manifest = load_manifest()
    checks = registered_checks()
    missing = sorted(set(checks) ^ set(manifest))
    if missing:
        logger.error("Catalog and manifest disagree", claims=missing)
        raise ValueError(f"claims without both a check and a manifest row: {missing}")
    return {cid: ClaimDefinition(manifest[cid], checks[cid]) for cid in sorted(manifest)}


def get_claim(claim_id: str) -> ClaimDefinition:
    try:
        return catalog()[claim_id]
    except KeyError:
        raise UnknownClaimError(f"unknown claim {claim_id!r}") from None


def params_for(entry: ManifestEntry, t: int, case: Optional[str] = None, gamma: Optional[int] = None) -> ClaimParams:
    if entry.grid is ParamGrid.GLOBAL:
        return ClaimParams()
    if entry.grid is ParamGrid.PER_T:
        return ClaimParams(t=t)
    if entry.grid is ParamGrid.GAMMA:
        return ClaimParams(t=t, n=2 ** t - 1, case="minus1", gamma=gamma or 0)
    case = case or "minus1"
    offset = {"minus1": 1, "minus2": 2, "minus3": 3}[case]
    return ClaimParams(t=t, n=2 ** t - offset, case=case, gamma=(gamma or 0) if case == "minus1" else None)


def expand_params(entry: ManifestEntry, t_min: int, t_max: int) -> List[ClaimParams]:
    """Every parameter set one run over t_min..t_max covers for this claim"""
    if not 3 <= t_min <= t_max <= 8:
        raise UnsupportedParameterError(f"t range must satisfy 3 <= t_min <= t_max <= 8, got {t_min}..{t_max}")
    if entry.grid is ParamGrid.GLOBAL:
        return [ClaimParams()]
    grid: List[ClaimParams] = []
    for t in range(t_min, t_max + 1):
        if entry.grid is ParamGrid.PER_T:
            grid.append(params_for(entry, t))
        elif entry.grid is ParamGrid.GAMMA:
            grid.extend(params_for(entry, t, gamma=g) for g in (0, 1))
        else:
            grid.append(params_for(entry, t, "minus1", 0))
            grid.append(params_for(entry, t, "minus1", 1))
            grid.append(params_for(entry, t, "minus2"))
            grid.append(params_for(entry, t, "minus3"))
    return grid
