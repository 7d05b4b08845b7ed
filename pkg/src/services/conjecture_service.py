"""
Conjecture Service

One checker per formulation of the second-neighborhood conjecture (C1-C6),
each returning a verdict with evidence that can be re-checked by direct
arithmetic, plus the cross-check harness relating the six formulations on a
single digraph and its reversal.

  C1  some vertex has d+(v) <= d++(v)
  C2  S_D 1 is not > 0
  C3  no weight w >= 0 has S_D w > 0
  C4  some weight w >= 0, w != 0 has S_D w <= 0
  C5  some v with a positive component has S_D v <= 0
  C6  S_D^-1 >= 0 never holds
"""

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.core.config import settings
from src.core.error_codes import ConjectureErrorCode
from src.core.exceptions import ConjectureException
from src.core.logger import get_logger
from src.models import BlowUp, Digraph, RatMatrix, RatVector, integer_scaling
from src.services.digraph_service import (
    blow_up,
    degree_gap,
    degree_table,
    delete_arc,
    delete_vertex,
    min_out_degree,
    reverse,
)
from src.services.farkas_service import (
    Solution,
    assemble_pinned_free_system,
    assemble_weight_system,
    solve_standard,
    strict_feasibility,
)
from src.services.linalg_service import (
    Singular,
    invert,
    is_nonnegative,
    mat_mul,
    mat_vec,
    second_neighborhood_matrix,
    transpose,
)

logger = get_logger(__name__)

MatrixBuilder = Callable[[Digraph], RatMatrix]


class ConjectureId(StrEnum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"

    @property
    def order(self) -> int:
        return list(ConjectureId).index(self)


class VerdictStatus(StrEnum):
    SATISFIED = "Satisfied"
    FAILS = "Fails"


class EvidenceKind(StrEnum):
    VERTEX = "vertex"
    DEGREE_TABLE = "degree_table"
    ROW_SUMS = "row_sums"
    STRICT_WEIGHT = "strict_weight"
    FARKAS_CERTIFICATE = "farkas_certificate"
    WEIGHT_VECTOR = "weight_vector"
    DUAL_VECTOR = "dual_vector"
    NULL_VECTOR = "null_vector"
    INVERSE_COLUMN = "inverse_column"
    NEGATIVE_INVERSE_ENTRY = "negative_inverse_entry"
    INVERSE_MATRIX = "inverse_matrix"


@dataclass(frozen=True)
class InverseEntry:
    """Negative entry (row, col) of S_D^-1, 1-based, with its whole column."""

    row: int
    col: int
    column: RatVector


class Verdict(BaseModel):
    """Outcome of one checker; evidence type is determined by evidence_kind."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    conjecture: ConjectureId = Field(..., description="Formulation checked")
    status: VerdictStatus = Field(..., description="Satisfied or Fails")
    evidence_kind: EvidenceKind = Field(..., description="Shape of the evidence")
    evidence: Any = Field(..., description="Witness or certificate payload")

    @property
    def satisfied(self) -> bool:
        return self.status == VerdictStatus.SATISFIED


class CrossCheckReport(BaseModel):
    """Six verdicts for D and reverse(D) with the relations between them."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    instance: str = Field(..., description="Instance identifier")
    verdicts: Tuple[Verdict, ...] = Field(..., description="Verdicts for D")
    reverse_verdicts: Tuple[Verdict, ...] = Field(
        ..., description="Verdicts for reverse(D)"
    )
    relations: Dict[str, bool] = Field(
        default_factory=dict, description="Relation name -> holds"
    )
    violations: List[str] = Field(
        default_factory=list, description="Names of relations that failed"
    )
    degree_gaps: Optional[Dict[int, int]] = Field(
        default=None, description="a(v) = d-(v) - d--(v) for flagged instances"
    )
    degree_gap_in_range: Optional[bool] = Field(
        default=None, description="Every a(v) lies in {1, 2}"
    )

    def verdict(self, conjecture: ConjectureId) -> Verdict:
        return self.verdicts[conjecture.order]

    @property
    def counterexamples(self) -> List[ConjectureId]:
        return [v.conjecture for v in self.verdicts if not v.satisfied]


@dataclass(frozen=True)
class LiftedCounterexample:
    """Blow-up of D by the integer weights derived from a strict C3 witness."""

    blowup: BlowUp
    multiplicities: Tuple[int, ...]
    fails_c1: bool
    fails_c2: bool

    @property
    def verified(self) -> bool:
        return self.fails_c1 and self.fails_c2


@dataclass(frozen=True)
class ClassRowSums:
    """(S_{D*} 1) over the class V_i compared with (S_D u)_i."""

    vertex: int
    expected: Fraction
    observed: Tuple[Fraction, ...]

    @property
    def passed(self) -> bool:
        return all(value == self.expected for value in self.observed)


def blow_up_row_sums(
    D: Digraph, multiplicities: Sequence[int], lifted: BlowUp
) -> Tuple[ClassRowSums, ...]:
    """Every vertex of V_i in D* has row sum (S_D u)_i when D* blows D up by u."""
    expected = mat_vec(second_neighborhood_matrix(D), RatVector.of(multiplicities))
    row_sums = mat_vec(
        second_neighborhood_matrix(lifted.digraph), RatVector.ones(lifted.digraph.n)
    )
    return tuple(
        ClassRowSums(
            vertex=i,
            expected=expected[i - 1],
            observed=tuple(row_sums[k - 1] for k in lifted.classes[i - 1]),
        )
        for i in D.vertices
    )


def kl_prune(D: Digraph) -> bool:
    """
    True iff D could still be a minimal counterexample: n >= 1 and every
    out-degree is at least settings.conjecture__kl_min_out_degree.
    """
    return D.n >= 1 and min_out_degree(D) >= settings.conjecture__kl_min_out_degree


def _is_weight_witness(S: RatMatrix, w: RatVector) -> bool:
    return w.is_nonnegative() and w.has_positive() and mat_vec(S, w).le(0)


class ConjectureService:
    """Checkers C1-C6 and the cross-check harness."""

    def __init__(self, matrix_builder: MatrixBuilder = second_neighborhood_matrix):
        self.matrix_builder = matrix_builder

    def _require_vertices(self, D: Digraph) -> None:
        if D.n == 0:
            raise ConjectureException(
                "Conjectures quantify over vertices; digraph is empty",
                ConjectureErrorCode.EMPTY_DIGRAPH,
                {"n": 0},
            )

    # checkers

    def check_c1(self, D: Digraph) -> Verdict:
        self._require_vertices(D)
        table = degree_table(D)
        for v, dplus, dplusplus in table:
            if dplus <= dplusplus:
                return Verdict(
                    conjecture=ConjectureId.C1,
                    status=VerdictStatus.SATISFIED,
                    evidence_kind=EvidenceKind.VERTEX,
                    evidence=v,
                )
        return Verdict(
            conjecture=ConjectureId.C1,
            status=VerdictStatus.FAILS,
            evidence_kind=EvidenceKind.DEGREE_TABLE,
            evidence=table,
        )

    def check_c2(self, D: Digraph) -> Verdict:
        self._require_vertices(D)
        row_sums = mat_vec(self.matrix_builder(D), RatVector.ones(D.n))
        return Verdict(
            conjecture=ConjectureId.C2,
            status=(
                VerdictStatus.FAILS if row_sums.gt(0) else VerdictStatus.SATISFIED
            ),
            evidence_kind=EvidenceKind.ROW_SUMS,
            evidence=row_sums,
        )

    def check_c3(self, D: Digraph) -> Verdict:
        """
        Look for w >= 0 with S_D w >= 1. When none exists the evidence is the
        nonexistence certificate q >= 0, q != 0 with S_D^T q <= 0.
        """
        self._require_vertices(D)
        S = self.matrix_builder(D)
        outcome = strict_feasibility(transpose(S))
        if isinstance(outcome, Solution):
            return Verdict(
                conjecture=ConjectureId.C3,
                status=VerdictStatus.FAILS,
                evidence_kind=EvidenceKind.STRICT_WEIGHT,
                evidence=RatVector(outcome.x.components[: D.n]),
            )
        return Verdict(
            conjecture=ConjectureId.C3,
            status=VerdictStatus.SATISFIED,
            evidence_kind=EvidenceKind.FARKAS_CERTIFICATE,
            evidence=-outcome.y,
        )

    def check_c4(self, D: Digraph) -> Verdict:
        """
        Solve [[S, I], [1^T, 0^T]] (w, s) = e_{n+1}. A solution gives w with
        1^T w = 1; a certificate (p, r) with r < 0 gives p / -r with
        S_D^T p >= 1.
        """
        self._require_vertices(D)
        S = self.matrix_builder(D)
        outcome = solve_standard(assemble_weight_system(S))
        if isinstance(outcome, Solution):
            return Verdict(
                conjecture=ConjectureId.C4,
                status=VerdictStatus.SATISFIED,
                evidence_kind=EvidenceKind.WEIGHT_VECTOR,
                evidence=RatVector(outcome.x.components[: D.n]),
            )
        p = RatVector(outcome.y.components[: D.n])
        r = outcome.y[D.n]
        return Verdict(
            conjecture=ConjectureId.C4,
            status=VerdictStatus.FAILS,
            evidence_kind=EvidenceKind.DUAL_VECTOR,
            evidence=p.scale(1 / -r),
        )

    def _c5_by_inverse(self, S: RatMatrix) -> Verdict:
        result = invert(S)
        if isinstance(result, Singular):
            u = result.null_vector
            return Verdict(
                conjecture=ConjectureId.C5,
                status=VerdictStatus.SATISFIED,
                evidence_kind=EvidenceKind.NULL_VECTOR,
                evidence=u if u.has_positive() else -u,
            )
        inverse = result.inverse
        for i, j, value in inverse.entries():
            if value < 0:
                # S (-column j) = -e_j <= 0 and component i is positive
                return Verdict(
                    conjecture=ConjectureId.C5,
                    status=VerdictStatus.SATISFIED,
                    evidence_kind=EvidenceKind.INVERSE_COLUMN,
                    evidence=-inverse.column(j),
                )
        return Verdict(
            conjecture=ConjectureId.C5,
            status=VerdictStatus.FAILS,
            evidence_kind=EvidenceKind.INVERSE_MATRIX,
            evidence=inverse,
        )

    def c5_by_lp(self, D: Digraph) -> Optional[RatVector]:
        """
        LP route for C5: the first k (ascending) for which a free v with
        v_k = 1 and S_D v <= 0 exists, or None.
        """
        self._require_vertices(D)
        S = self.matrix_builder(D)
        n = D.n
        for k in range(n):
            outcome = solve_standard(assemble_pinned_free_system(S, k))
            if isinstance(outcome, Solution):
                x = outcome.x.components
                return RatVector(tuple(a - b for a, b in zip(x[:n], x[n : 2 * n])))
        return None

    def check_c5(self, D: Digraph) -> Verdict:
        self._require_vertices(D)
        return self._c5_by_inverse(self.matrix_builder(D))

    def check_c6(self, D: Digraph) -> Verdict:
        self._require_vertices(D)
        result = invert(self.matrix_builder(D))
        if isinstance(result, Singular):
            return Verdict(
                conjecture=ConjectureId.C6,
                status=VerdictStatus.SATISFIED,
                evidence_kind=EvidenceKind.NULL_VECTOR,
                evidence=result.null_vector,
            )
        inverse = result.inverse
        for i, j, value in inverse.entries():
            if value < 0:
                return Verdict(
                    conjecture=ConjectureId.C6,
                    status=VerdictStatus.SATISFIED,
                    evidence_kind=EvidenceKind.NEGATIVE_INVERSE_ENTRY,
                    evidence=InverseEntry(i + 1, j + 1, inverse.column(j)),
                )
        return Verdict(
            conjecture=ConjectureId.C6,
            status=VerdictStatus.FAILS,
            evidence_kind=EvidenceKind.INVERSE_MATRIX,
            evidence=inverse,
        )

    def check(self, D: Digraph, conjecture: ConjectureId) -> Verdict:
        checkers = {
            ConjectureId.C1: self.check_c1,
            ConjectureId.C2: self.check_c2,
            ConjectureId.C3: self.check_c3,
            ConjectureId.C4: self.check_c4,
            ConjectureId.C5: self.check_c5,
            ConjectureId.C6: self.check_c6,
        }
        return checkers[conjecture](D)

    def check_all(self, D: Digraph) -> Tuple[Verdict, ...]:
        return tuple(self.check(D, c) for c in ConjectureId)

    # verification

    def verify_verdict(self, D: Digraph, verdict: Verdict) -> bool:
        """Re-check the evidence of a verdict against S_D or the degree table."""
        S = self.matrix_builder(D)
        kind = verdict.evidence_kind
        evidence = verdict.evidence
        satisfied = verdict.satisfied

        if kind == EvidenceKind.VERTEX:
            _, dplus, dplusplus = degree_table(D)[evidence - 1]
            return satisfied and dplus <= dplusplus
        if kind == EvidenceKind.DEGREE_TABLE:
            return (
                not satisfied
                and tuple(evidence) == degree_table(D)
                and all(dplus > dplusplus for _, dplus, dplusplus in evidence)
            )
        if kind == EvidenceKind.ROW_SUMS:
            if not evidence.eq(mat_vec(S, RatVector.ones(D.n))):
                return False
            return satisfied == evidence.not_gt(0)
        if kind == EvidenceKind.STRICT_WEIGHT:
            return (
                not satisfied
                and evidence.is_nonnegative()
                and mat_vec(S, evidence).gt(0)
            )
        if kind == EvidenceKind.FARKAS_CERTIFICATE:
            return satisfied and _is_weight_witness(transpose(S), evidence)
        if kind == EvidenceKind.WEIGHT_VECTOR:
            return (
                satisfied and _is_weight_witness(S, evidence) and evidence.total() == 1
            )
        if kind == EvidenceKind.DUAL_VECTOR:
            return (
                not satisfied
                and evidence.is_nonnegative()
                and mat_vec(transpose(S), evidence).gt(0)
            )
        if kind == EvidenceKind.NULL_VECTOR:
            if not (satisfied and not evidence.is_zero()):
                return False
            if not mat_vec(S, evidence).is_zero():
                return False
            return verdict.conjecture == ConjectureId.C6 or evidence.has_positive()
        if kind == EvidenceKind.INVERSE_COLUMN:
            return (
                satisfied
                and evidence.has_positive()
                and mat_vec(S, evidence).le(0)
            )
        if kind == EvidenceKind.NEGATIVE_INVERSE_ENTRY:
            # S c = e_col with c_row < 0 rules out a nonnegative inverse
            return (
                satisfied
                and evidence.column[evidence.row - 1] < 0
                and mat_vec(S, evidence.column).eq(
                    RatVector.unit(D.n, evidence.col - 1)
                )
            )
        if kind == EvidenceKind.INVERSE_MATRIX:
            return (
                not satisfied
                and is_nonnegative(evidence)
                and mat_mul(S, evidence) == RatMatrix.identity(D.n)
            )
        return False

    # harness

    def consistency_check(
        self,
        D: Digraph,
        instance: Optional[str] = None,
        lp_c5: Optional[bool] = None,
    ) -> CrossCheckReport:
        """
        Run all six checkers on D and reverse(D) and evaluate the relations
        between them. Violations are report content, never exceptions.
        """
        self._require_vertices(D)
        if lp_c5 is None:
            lp_c5 = settings.conjecture__c5_lp_crosscheck
        R = reverse(D)
        forward = self.check_all(D)
        backward = self.check_all(R)

        def ok(verdicts: Tuple[Verdict, ...], c: ConjectureId) -> bool:
            return verdicts[c.order].satisfied

        relations: Dict[str, bool] = {}
        relations["c1_status_equals_c2_status"] = ok(forward, ConjectureId.C1) == ok(
            forward, ConjectureId.C2
        )
        relations["c5_status_equals_c6_status"] = ok(forward, ConjectureId.C5) == ok(
            forward, ConjectureId.C6
        )

        c4_fails = not ok(forward, ConjectureId.C4)
        translation_holds = c4_fails == (not ok(backward, ConjectureId.C3))
        if translation_holds and c4_fails:
            p = forward[ConjectureId.C4.order].evidence
            translation_holds = p.is_nonnegative() and mat_vec(
                transpose(self.matrix_builder(D)), p
            ).gt(0)
        relations["c4_fails_iff_reverse_c3_fails"] = translation_holds

        relations["c5_fails_implies_c4_fails"] = (
            ok(forward, ConjectureId.C5) or c4_fails
        )
        relations["c2_fails_implies_reverse_c4_fails"] = ok(
            forward, ConjectureId.C2
        ) or not ok(backward, ConjectureId.C4)
        relations["witnesses_verified"] = all(
            self.verify_verdict(D, v) for v in forward
        ) and all(self.verify_verdict(R, v) for v in backward)
        relations["c2_fails_implies_c3_fails"] = ok(forward, ConjectureId.C2) or not ok(
            forward, ConjectureId.C3
        )

        reverse_c3 = backward[ConjectureId.C3.order]
        relations["reverse_c3_certificate_is_c4_witness"] = (
            not reverse_c3.satisfied
            or _is_weight_witness(self.matrix_builder(D), reverse_c3.evidence)
        )

        if lp_c5:
            v = self.c5_by_lp(D)
            lp_agrees = (v is not None) == ok(forward, ConjectureId.C5)
            if v is not None:
                lp_agrees = (
                    lp_agrees
                    and v.has_positive()
                    and mat_vec(self.matrix_builder(D), v).le(0)
                )
            relations["c5_lp_route_agrees"] = lp_agrees

        violations = [name for name, holds in relations.items() if not holds]
        if violations:
            logger.warning("Cross-check violations on %r: %s", D, violations)

        degree_gaps = self.degree_gap_profile(D, forward, backward)
        gap_in_range = None
        if degree_gaps is not None:
            gap_in_range = all(a in (1, 2) for a in degree_gaps.values())

        return CrossCheckReport(
            instance=instance if instance is not None else repr(D),
            verdicts=forward,
            reverse_verdicts=backward,
            relations=relations,
            violations=violations,
            degree_gaps=degree_gaps,
            degree_gap_in_range=gap_in_range,
        )

    def degree_gap_profile(
        self,
        D: Digraph,
        forward: Tuple[Verdict, ...],
        backward: Tuple[Verdict, ...],
    ) -> Optional[Dict[int, int]]:
        """
        Degree gap of every vertex when D fails C4, its reverse fails C2 and
        every single-arc deletion of D satisfies C4; None otherwise.
        """
        if forward[ConjectureId.C4.order].satisfied:
            return None
        if backward[ConjectureId.C2.order].satisfied:
            return None
        if not self.minimality_local(D, ConjectureId.C4):
            return None
        return {v: degree_gap(D, v) for v in D.vertices}

    # minimality

    def _require_failure(self, D: Digraph, conjecture: ConjectureId) -> None:
        if self.check(D, conjecture).satisfied:
            raise ConjectureException(
                f"{D!r} satisfies {conjecture}",
                ConjectureErrorCode.NOT_A_COUNTEREXAMPLE,
                {"conjecture": str(conjecture)},
            )

    def minimality_local(self, D: Digraph, conjecture: ConjectureId) -> bool:
        """
        True iff every single-arc deletion of the counterexample D satisfies
        the conjecture. This is necessary for, not equivalent to, having the
        fewest arcs overall.

        Raises:
            ConjectureException: NOT_A_COUNTEREXAMPLE
        """
        self._require_failure(D, conjecture)
        return all(
            self.check(delete_arc(D, arc), conjecture).satisfied
            for arc in D.sorted_arcs()
        )

    def minimality_vertex_local(self, D: Digraph, conjecture: ConjectureId) -> bool:
        """
        True iff every vertex deletion D - v satisfies the conjecture.
        Deletions that leave no vertices are skipped.

        Raises:
            ConjectureException: NOT_A_COUNTEREXAMPLE
        """
        self._require_failure(D, conjecture)
        for v in D.vertices:
            sub, _ = delete_vertex(D, v)
            if sub.n > 0 and not self.check(sub, conjecture).satisfied:
                return False
        return True

    # blow-up

    def lift_weight_counterexample(
        self, D: Digraph, w: RatVector
    ) -> LiftedCounterexample:
        """
        Turn a strict weight witness (w >= 0, S_D w > 0) into integer class
        sizes and blow D up by them.

        Zero weights become 1 while the positive part is doubled until
        S_D u > 0 still holds.

        Raises:
            ConjectureException: NOT_A_COUNTEREXAMPLE when w is not strict
        """
        S = self.matrix_builder(D)
        if not (w.is_nonnegative() and mat_vec(S, w).gt(0)):
            raise ConjectureException(
                "Weight vector is not a strict witness (need w >= 0, S_D w > 0)",
                ConjectureErrorCode.NOT_A_COUNTEREXAMPLE,
                {"w": w.to_strings()},
            )
        base = integer_scaling(w)
        factor = 1
        while True:
            u = tuple(factor * x if x > 0 else 1 for x in base)
            if mat_vec(S, RatVector.of(u)).gt(0):
                break
            factor *= 2

        lifted = blow_up(D, u)
        star = lifted.digraph
        fails_c1 = all(dplus > dplusplus for _, dplus, dplusplus in degree_table(star))
        fails_c2 = mat_vec(
            second_neighborhood_matrix(star), RatVector.ones(star.n)
        ).gt(0)
        logger.debug(
            "Lifted weight %s to multiplicities %s (fails C1: %s, C2: %s)",
            w,
            list(u),
            fails_c1,
            fails_c2,
        )
        return LiftedCounterexample(lifted, u, fails_c1, fails_c2)


__all__ = [
    "ConjectureId",
    "VerdictStatus",
    "EvidenceKind",
    "InverseEntry",
    "Verdict",
    "CrossCheckReport",
    "LiftedCounterexample",
    "ClassRowSums",
    "blow_up_row_sums",
    "ConjectureService",
    "kl_prune",
]
