"""
Elimination Service

Column-oriented Gauss-Jordan reduction of a square matrix C towards the
identity, tracking the accumulated transformation T with C T = X at every
step. Under the sign precondition (off-diagonal entries <= 0) only
nonnegative multiples of a column are ever added to another, so T stays
nonnegative and a non-positive pivot yields a certificate a >= 0, a != 0
with C a <= 0.

The second half builds the candidate inverse W' = W_hat T from weight
vectors of the vertex-deleted subdigraphs D - v_i.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from src.core.config import settings
from src.core.error_codes import EliminationErrorCode, LinalgErrorCode
from src.core.exceptions import EliminationException, LinalgException
from src.core.logger import get_logger
from src.models import Digraph, RatMatrix, RatVector
from src.services.digraph_service import delete_vertex
from src.services.farkas_service import (
    Solution,
    assemble_weight_system,
    solve_standard,
)
from src.services.linalg_service import mat_mul, mat_vec, second_neighborhood_matrix

logger = get_logger(__name__)


@dataclass(frozen=True)
class ColumnSuccess:
    """C T = I with T >= 0."""

    T: RatMatrix


@dataclass(frozen=True)
class ColumnFailure:
    """
    Pivot x_ii <= 0 met at 1-based step; a is column i of the accumulated
    transformation. certificate_valid is False when the input broke the sign
    precondition in permissive mode.
    """

    step: int
    a: RatVector
    certificate_valid: bool = True


EliminationResult = Union[ColumnSuccess, ColumnFailure]


@dataclass(frozen=True)
class DeletionSuccess:
    """S_D W' = I with W' >= 0."""

    W_prime: RatMatrix
    T: RatMatrix


@dataclass(frozen=True)
class DeletionFailure:
    step: int
    a: RatVector
    w: RatVector
    certificate_valid: bool = True


DeletionResult = Union[DeletionSuccess, DeletionFailure]


def _positive_off_diagonal(C: RatMatrix) -> Optional[List[int]]:
    for i, j, value in C.entries():
        if i != j and value > 0:
            return [i, j]
    return None


def _as_matrix(columns: List[List[Fraction]], n: int) -> RatMatrix:
    return RatMatrix(tuple(tuple(col[i] for col in columns) for i in range(n)), n)


def column_reduce(C: RatMatrix, strict: Optional[bool] = None) -> EliminationResult:
    """
    Reduce C column by column.

    At step i: exit with a failure if x_ii <= 0; otherwise add -x_ij/x_ii
    times column i to every other column j, then divide column i by x_ii.

    Args:
        C: Square matrix
        strict: Reject inputs with a positive off-diagonal entry; defaults to
            settings.elimination__strict

    Raises:
        LinalgException: NOT_SQUARE
        EliminationException: SIGN_PRECONDITION_VIOLATED in strict mode
    """
    if not C.is_square:
        raise LinalgException(
            f"Expected a square matrix, got {C.n_rows}x{C.n_cols}",
            LinalgErrorCode.NOT_SQUARE,
            {"shape": list(C.shape)},
        )
    if strict is None:
        strict = settings.elimination__strict

    offending = _positive_off_diagonal(C)
    if offending is not None and strict:
        raise EliminationException(
            f"Positive off-diagonal entry at {tuple(offending)}",
            EliminationErrorCode.SIGN_PRECONDITION_VIOLATED,
            {"entry": offending},
        )
    certificate_valid = offending is None

    n = C.n_rows
    X = [list(C.column(j)) for j in range(n)]
    T = [list(RatVector.unit(n, j)) for j in range(n)]

    for i in range(n):
        pivot = X[i][i]
        if pivot <= 0:
            logger.debug("Non-positive pivot %s at step %d", pivot, i + 1)
            return ColumnFailure(i + 1, RatVector(tuple(T[i])), certificate_valid)
        for j in range(n):
            if j == i or X[j][i] == 0:
                continue
            factor = -X[j][i] / pivot
            X[j] = [a + factor * b for a, b in zip(X[j], X[i])]
            T[j] = [a + factor * b for a, b in zip(T[j], T[i])]
        X[i] = [a / pivot for a in X[i]]
        T[i] = [a / pivot for a in T[i]]
        if settings.debug:
            assert mat_mul(C, _as_matrix(T, n)) == _as_matrix(X, n)

    return ColumnSuccess(_as_matrix(T, n))


def _weight_witness(D: Digraph) -> RatVector:
    if D.n == 0:
        return RatVector(())
    outcome = solve_standard(assemble_weight_system(second_neighborhood_matrix(D)))
    if not isinstance(outcome, Solution):
        raise EliminationException(
            f"{D!r} has no nonzero weight vector with S_D w <= 0",
            EliminationErrorCode.INVALID_DELETION_WITNESS,
            {"n": D.n, "arcs": [list(a) for a in D.sorted_arcs()]},
        )
    return RatVector(outcome.x.components[: D.n])


def deletion_witnesses(D: Digraph) -> List[RatVector]:
    """For each vertex v_i, a weight vector w_i on D - v_i with S w_i <= 0."""
    return [_weight_witness(delete_vertex(D, v)[0]) for v in D.vertices]


def _verify_deletion_witness(D: Digraph, index: int, w: RatVector) -> None:
    sub, _ = delete_vertex(D, index + 1)
    reason = None
    if w.dim != sub.n:
        reason = f"has dimension {w.dim}, expected {sub.n}"
    elif not w.is_nonnegative():
        reason = "has a negative component"
    elif sub.n > 0 and w.is_zero():
        reason = "is zero"
    elif not mat_vec(second_neighborhood_matrix(sub), w).le(0):
        reason = "does not satisfy S w <= 0 on the deleted digraph"
    if reason is not None:
        raise EliminationException(
            f"Deletion witness for vertex {index + 1} {reason}",
            EliminationErrorCode.INVALID_DELETION_WITNESS,
            {"vertex": index + 1, "w": w.to_strings()},
        )


def attempt_inverse_from_deletions(
    D: Digraph, w_list: Optional[Sequence[RatVector]] = None
) -> DeletionResult:
    """
    Build W_hat from the deletion witnesses (0 inserted at v_i), reduce
    C = S_D W_hat and return W' = W_hat T, or the failure combination a with
    w = W_hat a.

    Args:
        D: Digraph with n >= 1
        w_list: One witness per vertex; computed by deletion_witnesses when
            omitted

    Raises:
        EliminationException: INVALID_DELETION_WITNESS
    """
    if w_list is None:
        w_list = deletion_witnesses(D)
    if len(w_list) != D.n:
        raise EliminationException(
            f"Expected {D.n} deletion witnesses, got {len(w_list)}",
            EliminationErrorCode.INVALID_DELETION_WITNESS,
            {"n": D.n, "count": len(w_list)},
        )
    for i, w in enumerate(w_list):
        _verify_deletion_witness(D, i, w)

    W_hat = RatMatrix.from_columns(
        [w.insert(i, 0) for i, w in enumerate(w_list)], D.n
    )
    C = mat_mul(second_neighborhood_matrix(D), W_hat)
    result = column_reduce(C, strict=False)

    if isinstance(result, ColumnFailure):
        w = mat_vec(W_hat, result.a)
        logger.debug(
            "Deletion elimination on %r stopped at step %d with w = %s",
            D,
            result.step,
            w,
        )
        return DeletionFailure(result.step, result.a, w, result.certificate_valid)
    return DeletionSuccess(mat_mul(W_hat, result.T), result.T)


__all__ = [
    "ColumnSuccess",
    "ColumnFailure",
    "EliminationResult",
    "DeletionSuccess",
    "DeletionFailure",
    "DeletionResult",
    "column_reduce",
    "deletion_witnesses",
    "attempt_inverse_from_deletions",
]
