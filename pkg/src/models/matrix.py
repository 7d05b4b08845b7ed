"""Exact rational vectors and dense matrices.

Entries are fractions.Fraction, which keeps every value in lowest terms with
a positive denominator. Indexing is 0-based; vertex v corresponds to
component v - 1.

Vector relations follow the componentwise convention: ``u.le(v)`` means
u_i <= v_i for every i. Negated relations are existential: ``u.not_le(v)``
means u_i > v_i for at least one i, which is NOT the same as ``u.gt(v)``.
The predicates are named methods so that Python's ``not`` is never applied
to a componentwise relation by accident.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence, Tuple, Union

from src.core.error_codes import LinalgErrorCode
from src.core.exceptions import LinalgException

Scalar = Union[int, Fraction]
Operand = Union["RatVector", int, Fraction]


def as_fraction(value: Union[int, Fraction, str]) -> Fraction:
    """Coerce ints, fractions and "p/q" strings into a Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class RatVector:
    """Immutable column vector over the rationals."""

    components: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Union[int, Fraction, str]]) -> "RatVector":
        return cls(tuple(as_fraction(v) for v in values))

    @classmethod
    def zeros(cls, dim: int) -> "RatVector":
        return cls((Fraction(0),) * dim)

    @classmethod
    def ones(cls, dim: int) -> "RatVector":
        return cls((Fraction(1),) * dim)

    @classmethod
    def unit(cls, dim: int, index: int) -> "RatVector":
        """Standard basis vector e_index (0-based)."""
        return cls(tuple(Fraction(1 if k == index else 0) for k in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.components)

    def __getitem__(self, index: int) -> Fraction:
        return self.components[index]

    def _other(self, other: Operand) -> Tuple[Fraction, ...]:
        if isinstance(other, RatVector):
            if other.dim != self.dim:
                raise LinalgException(
                    f"Vector dimensions differ: {self.dim} vs {other.dim}",
                    LinalgErrorCode.DIMENSION_MISMATCH,
                    {"left": self.dim, "right": other.dim},
                )
            return other.components
        return (as_fraction(other),) * self.dim

    def _pairs(self, other: Operand) -> Iterator[Tuple[Fraction, Fraction]]:
        return zip(self.components, self._other(other))

    # arithmetic

    def __add__(self, other: Operand) -> "RatVector":
        return RatVector(tuple(a + b for a, b in self._pairs(other)))

    def __sub__(self, other: Operand) -> "RatVector":
        return RatVector(tuple(a - b for a, b in self._pairs(other)))

    def __neg__(self) -> "RatVector":
        return RatVector(tuple(-a for a in self.components))

    def scale(self, factor: Scalar) -> "RatVector":
        factor = as_fraction(factor)
        return RatVector(tuple(factor * a for a in self.components))

    def dot(self, other: "RatVector") -> Fraction:
        return sum((a * b for a, b in self._pairs(other)), Fraction(0))

    def total(self) -> Fraction:
        """1ᵀv."""
        return sum(self.components, Fraction(0))

    def insert(self, index: int, value: Scalar) -> "RatVector":
        """Copy with value inserted at position index (0-based)."""
        comps = list(self.components)
        comps.insert(index, as_fraction(value))
        return RatVector(tuple(comps))

    # componentwise relations

    def _all(self, other: Operand, rel: Callable[[Fraction, Fraction], bool]) -> bool:
        return all(rel(a, b) for a, b in self._pairs(other))

    def le(self, other: Operand) -> bool:
        return self._all(other, lambda a, b: a <= b)

    def lt(self, other: Operand) -> bool:
        return self._all(other, lambda a, b: a < b)

    def ge(self, other: Operand) -> bool:
        return self._all(other, lambda a, b: a >= b)

    def gt(self, other: Operand) -> bool:
        return self._all(other, lambda a, b: a > b)

    def eq(self, other: Operand) -> bool:
        return self._all(other, lambda a, b: a == b)

    # existential negations

    def not_le(self, other: Operand) -> bool:
        """Some component exceeds its counterpart."""
        return not self.le(other)

    def not_lt(self, other: Operand) -> bool:
        return not self.lt(other)

    def not_ge(self, other: Operand) -> bool:
        return not self.ge(other)

    def not_gt(self, other: Operand) -> bool:
        """Some component is <= its counterpart."""
        return not self.gt(other)

    def not_eq(self, other: Operand) -> bool:
        return not self.eq(other)

    # common sign tests

    def is_nonnegative(self) -> bool:
        return self.ge(0)

    def is_zero(self) -> bool:
        return self.eq(0)

    def has_positive(self) -> bool:
        return any(a > 0 for a in self.components)

    def first_index(self, predicate: Callable[[Fraction], bool]) -> int | None:
        """Smallest index whose component satisfies predicate, or None."""
        for k, a in enumerate(self.components):
            if predicate(a):
                return k
        return None

    def to_strings(self) -> list[str]:
        return [str(a) for a in self.components]

    def __str__(self) -> str:
        return "[" + ", ".join(self.to_strings()) + "]"


def integer_scaling(w: RatVector) -> Tuple[int, ...]:
    """Least positive multiple of w with integer components.

    The zero vector maps to itself.
    """
    if w.is_zero():
        return tuple(0 for _ in w)
    lcm = math.lcm(*(a.denominator for a in w))
    ints = [int(a * lcm) for a in w]
    gcd = math.gcd(*ints)
    return tuple(x // gcd for x in ints)


@dataclass(frozen=True)
class RatMatrix:
    """Immutable dense matrix over the rationals, stored row-major."""

    rows: Tuple[Tuple[Fraction, ...], ...]
    n_cols: int

    def __post_init__(self) -> None:
        for r, row in enumerate(self.rows):
            if len(row) != self.n_cols:
                raise LinalgException(
                    f"Row {r} has {len(row)} entries, expected {self.n_cols}",
                    LinalgErrorCode.DIMENSION_MISMATCH,
                    {"row": r, "length": len(row), "cols": self.n_cols},
                )

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Union[int, Fraction, str]]],
        n_cols: int | None = None,
    ) -> "RatMatrix":
        """Build from nested sequences; n_cols is needed only for 0 rows."""
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        return cls(tuple(tuple(as_fraction(x) for x in row) for row in rows), n_cols)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "RatMatrix":
        return cls(((Fraction(0),) * n_cols,) * n_rows, n_cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
            ),
            n,
        )

    @classmethod
    def from_columns(cls, columns: Sequence[RatVector], n_rows: int) -> "RatMatrix":
        return cls(
            tuple(tuple(col[i] for col in columns) for i in range(n_rows)),
            len(columns),
        )

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.n_rows, self.n_cols)

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def entry(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise LinalgException(
                f"Entry ({i},{j}) outside a {self.n_rows}x{self.n_cols} matrix",
                LinalgErrorCode.DIMENSION_MISMATCH,
                {"entry": [i, j], "shape": [self.n_rows, self.n_cols]},
            )
        return self.rows[i][j]

    def row(self, i: int) -> RatVector:
        return RatVector(self.rows[i])

    def column(self, j: int) -> RatVector:
        return RatVector(tuple(row[j] for row in self.rows))

    def entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Row-major (i, j, value) triples."""
        for i, row in enumerate(self.rows):
            for j, value in enumerate(row):
                yield i, j, value

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self.rows
        ) + "]"


__all__ = ["RatVector", "RatMatrix", "Scalar", "as_fraction", "integer_scaling"]
