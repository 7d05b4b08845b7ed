"""
CLI Output Schemas

Pydantic models for the JSON lines written to standard output. Rationals are
always strings ("p/q", or "p" when the denominator is 1).
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class VerdictLine(BaseModel):
    """One verdict of one instance."""

    model_config = ConfigDict(extra="forbid")

    instance: str = Field(..., description="Instance identifier")
    conjecture: str = Field(..., description="C1..C6", examples=["C4"])
    status: str = Field(..., description="Satisfied or Fails")
    evidence_kind: str = Field(..., description="Shape of the evidence payload")
    evidence: Any = Field(..., description="Witness or certificate payload")
    witness: str = Field(..., description="Readable witness", examples=["w = [1, 0]"])
    violations: List[str] = Field(
        default_factory=list, description="Cross-check relations that failed"
    )


class CrossCheckLine(BaseModel):
    """Relation results of one cross-checked instance."""

    model_config = ConfigDict(extra="forbid")

    instance: str
    relations: Dict[str, bool]
    violations: List[str]
    reverse_statuses: Dict[str, str] = Field(
        ..., description="Status of each conjecture on the reversed digraph"
    )
    degree_gaps: Optional[Dict[str, int]] = None
    degree_gap_in_range: Optional[bool] = None


class SweepSummaryLine(BaseModel):
    """Final line of a sweep; contains no timing so reruns are byte-identical."""

    model_config = ConfigDict(extra="forbid")

    mode: str
    n: int
    seed: Optional[int] = None
    samples: Optional[int] = None
    dedup: bool
    prune: bool
    start_index: int
    generated: int
    instances: int
    duplicates: int
    pruned: int
    counterexamples: Dict[str, int]
    violations: int
    violating_instances: List[int]


__all__ = ["VerdictLine", "CrossCheckLine", "SweepSummaryLine"]
