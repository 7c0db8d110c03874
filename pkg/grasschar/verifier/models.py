"""
Pydantic models for claim reports
"""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class ClaimStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped-degenerate"


class Witness(BaseModel):
    label: str
    value: str


class ClaimParams(BaseModel):
    t: Optional[int] = None
    n: Optional[int] = None
    case: Optional[str] = None
    gamma: Optional[int] = None
    extra: Dict[str, str] = Field(default_factory=dict)

    def sort_key(self) -> Tuple:
        # None sorts first
        return (
            (self.t is not None, self.t or 0),
            (self.case is not None, self.case or ""),
            (self.gamma is not None, self.gamma or 0),
        )

    def describe(self) -> str:
        parts = []
        if self.t is not None:
            parts.append(f"t={self.t}")
        if self.case is not None:
            parts.append(self.case)
        if self.gamma is not None:
            parts.append(f"gamma={self.gamma}")
        return " ".join(parts) or "-"


class ClaimReport(BaseModel):
    claim_id: str
    params: ClaimParams
    status: ClaimStatus
    witnesses: List[Witness] = Field(default_factory=list)
    duration_ms: int = 0

    @model_validator(mode="after")
    def failures_carry_witnesses(self) -> "ClaimReport":
        if self.status is ClaimStatus.FAIL and not self.witnesses:
            raise ValueError("a failed claim report needs at least one witness")
        return self

    def sort_key(self) -> Tuple:
        return (self.claim_id, self.params.sort_key())

    def to_json_line(self) -> str:
        return self.model_dump_json()

    def stable_json(self) -> str:
        """JSON without the duration, for run-to-run comparisons"""
        return self.model_dump_json(exclude={"duration_ms"})
