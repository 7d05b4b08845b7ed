"""
Linear Algebra Service

Exact products, transposition and Gauss-Jordan inversion over the rationals,
plus the second-neighborhood matrix of a digraph.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from src.core.error_codes import LinalgErrorCode
from src.core.exceptions import LinalgException
from src.core.logger import get_logger
from src.models import Digraph, RatMatrix, RatVector

logger = get_logger(__name__)

_ONE = Fraction(1)
_MINUS_ONE = Fraction(-1)
_ZERO = Fraction(0)


@dataclass(frozen=True)
class Invertible:
    inverse: RatMatrix


@dataclass(frozen=True)
class Singular:
    """Singular matrix together with a nonzero null vector."""

    null_vector: RatVector


InversionResult = Union[Invertible, Singular]


def second_neighborhood_matrix(D: Digraph) -> RatMatrix:
    """
    S_D with s_ij = 1 when d(v_i, v_j) = 1, -1 when d(v_i, v_j) = 2 and 0
    otherwise.
    """
    rows = []
    for u in D.vertices:
        dist = D.out_distance_rows[u]
        rows.append(
            tuple(
                _ONE if dist[v] == 1 else _MINUS_ONE if dist[v] == 2 else _ZERO
                for v in D.vertices
            )
        )
    return RatMatrix(tuple(rows), D.n)


def _require_square(M: RatMatrix) -> None:
    if not M.is_square:
        raise LinalgException(
            f"Expected a square matrix, got {M.n_rows}x{M.n_cols}",
            LinalgErrorCode.NOT_SQUARE,
            {"shape": list(M.shape)},
        )


def mat_vec(M: RatMatrix, x: RatVector) -> RatVector:
    if M.n_cols != x.dim:
        raise LinalgException(
            f"Cannot multiply a {M.n_rows}x{M.n_cols} matrix by a vector of "
            f"dimension {x.dim}",
            LinalgErrorCode.DIMENSION_MISMATCH,
            {"shape": list(M.shape), "dim": x.dim},
        )
    xs = x.components
    return RatVector(
        tuple(sum((a * b for a, b in zip(row, xs) if a), _ZERO) for row in M.rows)
    )


def mat_mul(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    if A.n_cols != B.n_rows:
        raise LinalgException(
            f"Cannot multiply {A.n_rows}x{A.n_cols} by {B.n_rows}x{B.n_cols}",
            LinalgErrorCode.DIMENSION_MISMATCH,
            {"left": list(A.shape), "right": list(B.shape)},
        )
    columns = [tuple(row[j] for row in B.rows) for j in range(B.n_cols)]
    return RatMatrix(
        tuple(
            tuple(
                sum((a * b for a, b in zip(row, col) if a), _ZERO) for col in columns
            )
            for row in A.rows
        ),
        B.n_cols,
    )


def transpose(M: RatMatrix) -> RatMatrix:
    return RatMatrix(
        tuple(tuple(row[j] for row in M.rows) for j in range(M.n_cols)),
        M.n_rows,
    )


def is_nonnegative(M: RatMatrix) -> bool:
    return all(value >= 0 for row in M.rows for value in row)


def _rref(grid: List[List[Fraction]], n_pivot_cols: int) -> List[int]:
    """
    Reduce grid in place to reduced row echelon form over its first
    n_pivot_cols columns. Returns the pivot column of each pivot row.
    """
    pivots: List[int] = []
    r = 0
    n_rows = len(grid)
    for c in range(n_pivot_cols):
        if r == n_rows:
            break
        # first nonzero entry; no magnitude pivoting over exact rationals
        p = next((k for k in range(r, n_rows) if grid[k][c] != 0), None)
        if p is None:
            continue
        grid[r], grid[p] = grid[p], grid[r]
        inv = 1 / grid[r][c]
        grid[r] = [value * inv for value in grid[r]]
        for k in range(n_rows):
            factor = grid[k][c]
            if k != r and factor != 0:
                pivot_row = grid[r]
                grid[k] = [a - factor * b for a, b in zip(grid[k], pivot_row)]
        pivots.append(c)
        r += 1
    return pivots


def null_vector(M: RatMatrix) -> RatVector | None:
    """Nonzero u with M u = 0 read off the first free column, or None."""
    grid = [list(row) for row in M.rows]
    pivots = _rref(grid, M.n_cols)
    free = next((c for c in range(M.n_cols) if c not in pivots), None)
    if free is None:
        return None
    u = [_ZERO] * M.n_cols
    u[free] = _ONE
    for r, c in enumerate(pivots):
        u[c] = -grid[r][free]
    return RatVector(tuple(u))


def invert(M: RatMatrix) -> InversionResult:
    """
    Exact inverse by Gauss-Jordan on [M | I].

    Returns:
        Invertible with M^-1, or Singular with a nonzero null vector of M

    Raises:
        LinalgException: NOT_SQUARE
    """
    _require_square(M)
    n = M.n_rows
    grid = [
        list(row) + [_ONE if i == j else _ZERO for j in range(n)]
        for i, row in enumerate(M.rows)
    ]
    pivots = _rref(grid, n)
    if len(pivots) < n:
        u = null_vector(M)
        assert u is not None
        logger.debug("Singular %dx%d matrix, null vector %s", n, n, u)
        return Singular(u)
    return Invertible(RatMatrix(tuple(tuple(row[n:]) for row in grid), n))


__all__ = [
    "Invertible",
    "Singular",
    "InversionResult",
    "second_neighborhood_matrix",
    "mat_vec",
    "mat_mul",
    "transpose",
    "is_nonnegative",
    "null_vector",
    "invert",
]
