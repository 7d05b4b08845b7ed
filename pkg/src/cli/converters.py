"""Converters from service results to CLI output lines."""

import json
from typing import Any, List

from pydantic import BaseModel

from src.cli.schemas import CrossCheckLine, SweepSummaryLine, VerdictLine
from src.models import RatMatrix, RatVector
from src.services.conjecture_service import (
    CrossCheckReport,
    EvidenceKind,
    InverseEntry,
    Verdict,
)
from src.services.sweep_service import SearchReport

_WITNESS_NAMES = {
    EvidenceKind.VERTEX: "v",
    EvidenceKind.DEGREE_TABLE: "degrees",
    EvidenceKind.ROW_SUMS: "S1",
    EvidenceKind.STRICT_WEIGHT: "w",
    EvidenceKind.FARKAS_CERTIFICATE: "q",
    EvidenceKind.WEIGHT_VECTOR: "w",
    EvidenceKind.DUAL_VECTOR: "p",
    EvidenceKind.NULL_VECTOR: "u",
    EvidenceKind.INVERSE_COLUMN: "v",
    EvidenceKind.INVERSE_MATRIX: "S^-1",
}


def vector_to_json(v: RatVector) -> List[str]:
    return v.to_strings()


def matrix_to_json(M: RatMatrix) -> List[List[str]]:
    return [[str(x) for x in row] for row in M.rows]


def evidence_to_json(kind: EvidenceKind, evidence: Any) -> Any:
    if kind == EvidenceKind.VERTEX:
        return int(evidence)
    if kind == EvidenceKind.DEGREE_TABLE:
        return [list(row) for row in evidence]
    if kind == EvidenceKind.INVERSE_MATRIX:
        return matrix_to_json(evidence)
    if kind == EvidenceKind.NEGATIVE_INVERSE_ENTRY:
        return {
            "row": evidence.row,
            "col": evidence.col,
            "column": vector_to_json(evidence.column),
        }
    return vector_to_json(evidence)


def witness_text(kind: EvidenceKind, evidence: Any) -> str:
    if isinstance(evidence, InverseEntry):
        value = evidence.column[evidence.row - 1]
        return f"S^-1[{evidence.row},{evidence.col}] = {value}"
    if kind == EvidenceKind.DEGREE_TABLE:
        rows = ", ".join(f"{v}:{a}>{b}" for v, a, b in evidence)
        return f"degrees = [{rows}]"
    return f"{_WITNESS_NAMES[kind]} = {evidence}"


def convert_verdict_to_line(
    instance: str, verdict: Verdict, violations: List[str] | None = None
) -> VerdictLine:
    return VerdictLine(
        instance=instance,
        conjecture=str(verdict.conjecture),
        status=str(verdict.status),
        evidence_kind=str(verdict.evidence_kind),
        evidence=evidence_to_json(verdict.evidence_kind, verdict.evidence),
        witness=witness_text(verdict.evidence_kind, verdict.evidence),
        violations=list(violations or []),
    )


def convert_report_to_verdict_lines(report: CrossCheckReport) -> List[VerdictLine]:
    return [
        convert_verdict_to_line(report.instance, v, report.violations)
        for v in report.verdicts
    ]


def convert_report_to_cross_check_line(report: CrossCheckReport) -> CrossCheckLine:
    return CrossCheckLine(
        instance=report.instance,
        relations=dict(report.relations),
        violations=list(report.violations),
        reverse_statuses={
            str(v.conjecture): str(v.status) for v in report.reverse_verdicts
        },
        degree_gaps=(
            {str(v): a for v, a in report.degree_gaps.items()}
            if report.degree_gaps is not None
            else None
        ),
        degree_gap_in_range=report.degree_gap_in_range,
    )


def convert_search_report_to_summary(report: SearchReport) -> SweepSummaryLine:
    """Summary without wall time, which goes to standard error only."""
    spec = report.spec
    random_mode = spec.sample_count is not None
    return SweepSummaryLine(
        mode=str(spec.mode),
        n=spec.n,
        seed=spec.seed if random_mode else None,
        samples=spec.sample_count,
        dedup=spec.dedup,
        prune=spec.prune,
        start_index=report.start_index,
        generated=report.generated,
        instances=report.instances,
        duplicates=report.duplicates,
        pruned=report.pruned,
        counterexamples={c: len(ix) for c, ix in report.counterexamples.items()},
        violations=report.violation_count,
        violating_instances=list(report.violating_instances),
    )


def to_json_line(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"))


__all__ = [
    "vector_to_json",
    "matrix_to_json",
    "evidence_to_json",
    "witness_text",
    "convert_verdict_to_line",
    "convert_report_to_verdict_lines",
    "convert_report_to_cross_check_line",
    "convert_search_report_to_summary",
    "to_json_line",
]
