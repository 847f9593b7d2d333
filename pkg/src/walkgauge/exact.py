"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`.  Systems are solved by Bareiss
fraction-free elimination on an integer matrix obtained by clearing each row's
denominators; back substitution is done in lowest-terms rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, SingularMatrix
from .graph import Graph

Rational = Fraction


def fmt_rational(q) -> str:
    """``p/q`` or ``p`` when the denominator is 1."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(f"{len(self.entries)} entries for {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise DimensionMismatch("ragged rows")
        return cls(r, c, tuple(Fraction(x) for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def matvec(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} for {self.cols} columns")
        return [sum((a * b for a, b in zip(self.row(i), x)), Fraction(0)) for i in range(self.rows)]

    def submatrix(self, keep_rows: Sequence[int], keep_cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix.from_rows([[self[i, j] for j in keep_cols] for i in keep_rows])


def laplacian(g: Graph) -> RationalMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = -1
    for v in range(g.n):
        rows[v][v] = g.degree[v]
    return RationalMatrix.from_rows(rows)


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def _bareiss(m: list[list[int]], n: int) -> int:
    """In-place fraction-free forward elimination of the first ``n`` columns.

    Returns the sign of the row permutation; raises SingularMatrix.
    """
    sign = 1
    prev = 1
    width = len(m[0]) if m else 0
    for i in range(n):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if m[r][i] != 0), None)
            if swap is None:
                raise SingularMatrix(f"zero pivot in column {i}")
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        piv = m[i][i]
        row_i = m[i]
        for r in range(i + 1, n):
            row_r = m[r]
            a = row_r[i]
            for c in range(i + 1, width):
                row_r[c] = (row_r[c] * piv - a * row_i[c]) // prev
            row_r[i] = 0
        prev = piv
    return sign


def determinant(a: RationalMatrix) -> Fraction:
    if a.rows != a.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    if a.rows == 0:
        return Fraction(1)
    rows = a.to_rows()
    scales = [math.lcm(*(x.denominator for x in row)) for row in rows]
    m = _integer_rows(rows)
    try:
        sign = _bareiss(m, a.rows)
    except SingularMatrix:
        return Fraction(0)
    return Fraction(sign * m[-1][-1], math.prod(scales))


def solve_many(a: RationalMatrix, columns: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve ``a @ x = b`` for each right-hand side ``b`` in ``columns``."""
    n = a.rows
    if a.cols != n:
        raise DimensionMismatch(f"{a.rows}x{a.cols} system is not square")
    for b in columns:
        if len(b) != n:
            raise DimensionMismatch(f"right-hand side of length {len(b)} for {n} unknowns")
    k = len(columns)
    aug = [list(a.row(i)) + [Fraction(b[i]) for b in columns] for i in range(n)]
    m = _integer_rows(aug)
    _bareiss(m, n)
    sols = []
    for c in range(k):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = Fraction(m[i][n + c])
            row = m[i]
            for j in range(i + 1, n):
                if row[j]:
                    acc -= row[j] * x[j]
            x[i] = acc / row[i]
        sols.append(x)
    return sols


def solve_linear_system(a: RationalMatrix, b: Sequence) -> list[Fraction]:
    """Exact solution of ``a @ x = b``; the result is checked by substitution."""
    x = solve_many(a, [b])[0]
    if a.matvec(x) != [Fraction(v) for v in b]:
        raise ArithmeticError("back-substitution check failed")  # pragma: no cover
    return x


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: determinant of the Laplacian with row/column 0 deleted."""
    if g.n <= 1:
        return 1
    keep = list(range(1, g.n))
    det = determinant(laplacian(g).submatrix(keep, keep))
    assert det.denominator == 1
    return int(det)
