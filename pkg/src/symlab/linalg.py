"""Small exact matrices over any fields.Field.

Sizes here never exceed 5x5, so the determinant uses Laplace expansion
(division-free, which matters for function-field entries) and inversion
uses Gauss-Jordan elimination with exact zero tests.
"""

from __future__ import annotations

from .fields import Field, FieldElement


def laplace_det(rows):
    """Determinant by cofactor expansion; entries need only +, -, *.

    Works for FieldElement and MultiPoly entries alike.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * laplace_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


class Matrix:
    """Immutable dense matrix over a field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        self.field = field
        self.rows = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, field, n):
        return cls(
            field,
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
        )

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("matrix shape mismatch")
        return Matrix(
            self.field,
            [
                [
                    sum(
                        (self.rows[i][k] * other.rows[k][j] for k in range(self.ncols)),
                        self.field.zero,
                    )
                    for j in range(other.ncols)
                ]
                for i in range(self.nrows)
            ],
        )

    def mul_vec(self, vec):
        vec = [self.field.coerce(x) for x in vec]
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return [
            sum((self.rows[i][k] * vec[k] for k in range(self.ncols)), self.field.zero)
            for i in range(self.nrows)
        ]

    def transpose(self):
        return Matrix(self.field, list(zip(*self.rows)))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and all(
                a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
            )
        )

    def __hash__(self):  # pragma: no cover
        raise TypeError("Matrix is not hashable")

    def det(self) -> FieldElement:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return self.field.one
        return laplace_det([list(r) for r in self.rows])

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises ValueError when singular."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = [
            list(self.rows[i])
            + [self.field.one if i == j else self.field.zero for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            piv = next(
                (r for r in range(col, n) if not aug[r][col].is_zero()), None
            )
            if piv is None:
                raise ValueError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Matrix(self.field, [row[n:] for row in aug])

    def solve(self, rhs):
        """Solve self * x = rhs for a single right-hand-side vector."""
        return self.inverse().mul_vec(rhs)

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + "]"

    def __repr__(self):
        return self.__str__()
