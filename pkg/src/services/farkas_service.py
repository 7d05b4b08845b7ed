"""
Farkas Service

Exact feasibility of {M x = b, x >= 0} by phase-1 simplex with Bland's rule.
Every call ends in exactly one of two verified answers: a Solution x, or a
Certificate y with M^T y >= 0 and b^T y < 0.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from src.core.error_codes import FarkasErrorCode, LinalgErrorCode
from src.core.exceptions import FarkasException, LinalgException
from src.core.logger import get_logger
from src.models import RatMatrix, RatVector
from src.services.linalg_service import mat_vec, transpose

logger = get_logger(__name__)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class StandardSystem:
    """M x = b, x >= 0 with M of shape m x n."""

    M: RatMatrix
    b: RatVector

    def __post_init__(self) -> None:
        if self.M.n_rows != self.b.dim:
            raise LinalgException(
                f"Right-hand side has dimension {self.b.dim}, "
                f"expected {self.M.n_rows}",
                LinalgErrorCode.DIMENSION_MISMATCH,
                {"rows": self.M.n_rows, "rhs": self.b.dim},
            )

    @property
    def m(self) -> int:
        return self.M.n_rows

    @property
    def n(self) -> int:
        return self.M.n_cols


@dataclass(frozen=True)
class Solution:
    x: RatVector


@dataclass(frozen=True)
class Certificate:
    y: RatVector


FeasibilityOutcome = Union[Solution, Certificate]


def verify_outcome(system: StandardSystem, outcome: FeasibilityOutcome) -> bool:
    """
    Re-check the branch inequalities by direct arithmetic.

    Raises:
        LinalgException: DIMENSION_MISMATCH when the payload does not fit
    """
    if isinstance(outcome, Solution):
        return outcome.x.is_nonnegative() and mat_vec(system.M, outcome.x).eq(
            system.b
        )
    y = outcome.y
    return mat_vec(transpose(system.M), y).is_nonnegative() and system.b.dot(y) < 0


class _Tableau:
    """Phase-1 tableau; columns 0..n-1 are original, n..n+m-1 artificial."""

    def __init__(self, system: StandardSystem) -> None:
        m, n = system.m, system.n
        self.m = m
        self.n = n
        self.signs: List[int] = []
        self.rows: List[List[Fraction]] = []
        self.rhs: List[Fraction] = []
        for i in range(m):
            sign = -1 if system.b[i] < 0 else 1
            self.signs.append(sign)
            artificial = [_ONE if k == i else _ZERO for k in range(m)]
            self.rows.append([sign * a for a in system.M.rows[i]] + artificial)
            self.rhs.append(sign * system.b[i])
        self.basis = [n + i for i in range(m)]
        self.reduced = [
            -sum((self.rows[i][j] for i in range(m)), _ZERO) for j in range(n)
        ] + [_ZERO] * m
        self.objective = sum(self.rhs, _ZERO)

    def entering(self) -> int | None:
        return next((j for j, r in enumerate(self.reduced) if r < 0), None)

    def leaving(self, e: int) -> int:
        best: int | None = None
        best_ratio = _ZERO
        for i in range(self.m):
            a = self.rows[i][e]
            if a <= 0:
                continue
            ratio = self.rhs[i] / a
            if (
                best is None
                or ratio < best_ratio
                or (ratio == best_ratio and self.basis[i] < self.basis[best])
            ):
                best, best_ratio = i, ratio
        # phase 1 is bounded below by zero, so some row always qualifies
        assert best is not None
        return best

    def pivot(self, p: int, e: int) -> None:
        inv = 1 / self.rows[p][e]
        self.rows[p] = [a * inv for a in self.rows[p]]
        self.rhs[p] *= inv
        pivot_row = self.rows[p]
        for i in range(self.m):
            factor = self.rows[i][e]
            if i != p and factor != 0:
                self.rows[i] = [
                    a - factor * b for a, b in zip(self.rows[i], pivot_row)
                ]
                self.rhs[i] -= factor * self.rhs[p]
        r_e = self.reduced[e]
        self.reduced = [r - r_e * b for r, b in zip(self.reduced, pivot_row)]
        self.objective += r_e * self.rhs[p]
        self.basis[p] = e


def solve_standard(system: StandardSystem) -> FeasibilityOutcome:
    """
    Decide {M x = b, x >= 0} exactly.

    Returns:
        Solution(x) or Certificate(y), verified before returning

    Raises:
        FarkasException: ITERATION_LIMIT or UNVERIFIED_OUTCOME on a solver
            defect
    """
    m, n = system.m, system.n
    if m == 0:
        return Solution(RatVector.zeros(n))

    tableau = _Tableau(system)
    ceiling = math.comb(n + m, m)
    iterations = 0
    while tableau.objective != 0:
        e = tableau.entering()
        if e is None:
            break
        iterations += 1
        if iterations > ceiling:
            raise FarkasException(
                f"Simplex exceeded {ceiling} pivots on a {m}x{n} system",
                FarkasErrorCode.ITERATION_LIMIT,
                {"m": m, "n": n, "ceiling": ceiling},
            )
        tableau.pivot(tableau.leaving(e), e)

    outcome: FeasibilityOutcome
    if tableau.objective == 0:
        x = [_ZERO] * n
        for i, j in enumerate(tableau.basis):
            if j < n:
                x[j] = tableau.rhs[i]
        outcome = Solution(RatVector(tuple(x)))
    else:
        # optimal phase-1 duals are u_i = 1 - r_{a_i}; undo the row sign flips
        y = tuple(
            -tableau.signs[i] * (1 - tableau.reduced[n + i]) for i in range(m)
        )
        outcome = Certificate(RatVector(y))

    logger.debug(
        "Solved %dx%d system in %d pivots: %s",
        m,
        n,
        iterations,
        type(outcome).__name__,
    )
    if not verify_outcome(system, outcome):
        raise FarkasException(
            "Solver outcome failed verification",
            FarkasErrorCode.UNVERIFIED_OUTCOME,
            {"m": m, "n": n, "branch": type(outcome).__name__},
        )
    return outcome


def assemble_weight_system(S: RatMatrix) -> StandardSystem:
    """
    [[S, I], [1^T, 0^T]] (w, s) = e_{n+1}: a weight w >= 0 with 1^T w = 1
    and S w <= 0.
    """
    if not S.is_square:
        raise LinalgException(
            f"Expected a square matrix, got {S.n_rows}x{S.n_cols}",
            LinalgErrorCode.NOT_SQUARE,
            {"shape": list(S.shape)},
        )
    n = S.n_rows
    rows = [
        tuple(S.rows[i]) + tuple(_ONE if k == i else _ZERO for k in range(n))
        for i in range(n)
    ]
    rows.append((_ONE,) * n + (_ZERO,) * n)
    return StandardSystem(RatMatrix(tuple(rows), 2 * n), RatVector.unit(n + 1, n))


def assemble_pinned_free_system(S: RatMatrix, k: int) -> StandardSystem:
    """
    Free v = v+ - v- with S v + s = 0 and v_k = 1; columns are (v+, v-, s).
    """
    n = S.n_rows
    rows = []
    for i in range(n):
        row = S.rows[i]
        rows.append(
            tuple(row)
            + tuple(-a for a in row)
            + tuple(_ONE if c == i else _ZERO for c in range(n))
        )
    pin = tuple(_ONE if c == k else _ZERO for c in range(n))
    rows.append(pin + tuple(-a for a in pin) + (_ZERO,) * n)
    return StandardSystem(RatMatrix(tuple(rows), 3 * n), RatVector.unit(n + 1, n))


def strict_feasibility(A: RatMatrix) -> FeasibilityOutcome:
    """
    Solve [A^T | -I] (p, s) = 1, i.e. p >= 0 with A^T p >= 1.

    A Certificate y gives q = -y with q >= 0, q != 0 and A q <= 0.
    """
    k, n = A.shape
    At = transpose(A)
    rows = tuple(
        tuple(At.rows[i]) + tuple(-_ONE if c == i else _ZERO for c in range(n))
        for i in range(n)
    )
    return solve_standard(StandardSystem(RatMatrix(rows, k + n), RatVector.ones(n)))


def exists_nonneg_strict(A: RatMatrix) -> RatVector | None:
    """p >= 0 with A^T p >= 1, or None when no p >= 0 has A^T p > 0."""
    outcome = strict_feasibility(A)
    if isinstance(outcome, Certificate):
        return None
    p = RatVector(outcome.x.components[: A.n_rows])
    if not (p.is_nonnegative() and mat_vec(transpose(A), p).ge(1)):
        raise FarkasException(
            "Strict witness failed verification",
            FarkasErrorCode.UNVERIFIED_OUTCOME,
            {"p": p.to_strings()},
        )
    return p


__all__ = [
    "StandardSystem",
    "Solution",
    "Certificate",
    "FeasibilityOutcome",
    "verify_outcome",
    "solve_standard",
    "assemble_weight_system",
    "assemble_pinned_free_system",
    "strict_feasibility",
    "exists_nonneg_strict",
]
