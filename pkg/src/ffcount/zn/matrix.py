"""Matrices over Z/nZ and the degree matrices of sparse polynomials."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ffcount.errors import PreconditionError
from ffcount.poly import SparsePoly


@dataclass(frozen=True)
class ZnMatrix:
    """An n_rows x n_cols matrix with entries canonicalized to [0, n_mod - 1]."""

    n_mod: int
    n_rows: int
    n_cols: int
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_mod: int, n_cols: int = -1) -> "ZnMatrix":
        if n_mod < 1:
            raise ValueError(f"Modulus must be positive, got {n_mod}")
        reduced = tuple(tuple(int(x) % n_mod for x in row) for row in rows)
        if n_cols < 0:
            if not reduced:
                raise ValueError("n_cols is required for a matrix without rows")
            n_cols = len(reduced[0])
        for row in reduced:
            if len(row) != n_cols:
                raise ValueError(f"Row {row} does not have {n_cols} entries")
        return cls(n_mod, len(reduced), n_cols, reduced)

    @classmethod
    def identity(cls, size: int, n_mod: int) -> "ZnMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)], n_mod, size
        )

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.n_rows, self.n_cols)

    def pad_rows(self, n_rows: int) -> "ZnMatrix":
        """Append zero rows up to n_rows."""
        if n_rows < self.n_rows:
            raise ValueError(f"Cannot pad {self.n_rows} rows down to {n_rows}")
        extra = [[0] * self.n_cols for _ in range(n_rows - self.n_rows)]
        return ZnMatrix.from_rows(self.rows() + extra, self.n_mod, self.n_cols)

    def with_column(self, column: Sequence[int]) -> "ZnMatrix":
        if len(column) != self.n_rows:
            raise ValueError(f"Column needs {self.n_rows} entries, got {len(column)}")
        return ZnMatrix.from_rows(
            [list(row) + [c] for row, c in zip(self.entries, column)], self.n_mod, self.n_cols + 1
        )

    def __matmul__(self, other: "ZnMatrix") -> "ZnMatrix":
        if self.n_mod != other.n_mod or self.n_cols != other.n_rows:
            raise ValueError("Incompatible matrices")
        product = [
            [
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.n_cols))
                for j in range(other.n_cols)
            ]
            for i in range(self.n_rows)
        ]
        return ZnMatrix.from_rows(product, self.n_mod, other.n_cols)

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """M * v mod n."""
        if len(vector) != self.n_cols:
            raise ValueError(f"Vector needs {self.n_cols} entries, got {len(vector)}")
        return tuple(
            sum(a * int(v) for a, v in zip(row, vector)) % self.n_mod for row in self.entries
        )

    def annihilates(self, vector: Sequence[int]) -> bool:
        return not any(self.apply(vector))


def _require_terms(f: SparsePoly) -> None:
    if not f.terms:
        raise PreconditionError(
            "Degree matrix of a polynomial without terms", reason="empty_polynomial"
        )


def degree_matrix(f: SparsePoly) -> ZnMatrix:
    """n x s matrix over Z_{q-1} whose column j is the exponent vector of term j."""
    _require_terms(f)
    rows = [[t.exponents[i] for t in f.terms] for i in range(f.n_vars)]
    return ZnMatrix.from_rows(rows, max(f.ctx.order, 1), f.s)


def augmented_degree_matrix(f: SparsePoly, include_constant: bool = False) -> ZnMatrix:
    """The degree matrix with a prepended all-ones row.

    With ``include_constant`` and b != 0, the constant term contributes a final
    column (1, 0, ..., 0).
    """
    _require_terms(f)
    n_mod = max(f.ctx.order, 1)
    matrix = ZnMatrix.from_rows([[1] * f.s], n_mod, f.s)
    if f.n_vars:
        matrix = ZnMatrix.from_rows(matrix.rows() + degree_matrix(f).rows(), n_mod, f.s)
    if include_constant and f.constant.value != 0:
        matrix = matrix.with_column([1] + [0] * f.n_vars)
    return matrix
