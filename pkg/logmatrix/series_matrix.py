"""Square matrices of truncated series: C_n, M_n and M*_n all live here."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from logmatrix.frobenius import Side
from padic.errors import UsageError
from padic.series import TruncatedSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EntryWitness:
    """First place where two matrices disagree at their common precision."""
    row: int
    col: int
    coefficient: int
    left: str
    right: str

    def as_dict(self) -> dict:
        return {
            "entry": [self.row, self.col],
            "coefficient": self.coefficient,
            "left": self.left,
            "right": self.right,
        }


@dataclass(frozen=True)
class SeriesMatrix:
    p: int
    x_prec: int
    entries: tuple[tuple[TruncatedSeries, ...], ...]
    level: int | None = None
    side: Side | None = None

    def __post_init__(self) -> None:
        g = len(self.entries)
        for row in self.entries:
            if len(row) != g:
                raise UsageError(f"series matrix is not square: {[len(r) for r in self.entries]}")
            for f in row:
                if f.p != self.p or f.x_prec != self.x_prec:
                    raise UsageError(
                        f"entry with (p={f.p}, D={f.x_prec}) in a matrix over (p={self.p}, D={self.x_prec})"
                    )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def of(
        cls,
        rows: Sequence[Sequence[TruncatedSeries]],
        p: int,
        x_prec: int,
        level: int | None = None,
        side: Side | None = None,
    ) -> SeriesMatrix:
        return cls(p=p, x_prec=x_prec, entries=tuple(tuple(r) for r in rows), level=level, side=side)

    @classmethod
    def from_int_matrix(cls, p: int, a: Sequence[Sequence[int]], x_prec: int, p_prec: int) -> SeriesMatrix:
        rows = [[TruncatedSeries.build(p, [x], x_prec, p_prec) for x in row] for row in a]
        return cls.of(rows, p, x_prec)

    @classmethod
    def identity(cls, p: int, g: int, x_prec: int, p_prec: int) -> SeriesMatrix:
        return cls.from_int_matrix(p, [[int(i == j) for j in range(g)] for i in range(g)], x_prec, p_prec)

    @classmethod
    def scalar_diagonal(cls, f: TruncatedSeries, g: int) -> SeriesMatrix:
        """f * I_g; off-diagonal zeros are as precise as ``f``."""
        zero = TruncatedSeries.zero(f.p, f.x_prec, f.p_prec)
        rows = [[f if i == j else zero for j in range(g)] for i in range(g)]
        return cls.of(rows, f.p, f.x_prec)

    # ------------------------------------------------------------------
    # Shape and metadata
    # ------------------------------------------------------------------

    @property
    def g(self) -> int:
        return len(self.entries)

    @property
    def denominator_exp(self) -> int:
        return max((f.denom_exp for row in self.entries for f in row), default=0)

    @property
    def absolute_precision(self) -> int | None:
        return min((f.absolute_precision for row in self.entries for f in row), default=None)

    def __getitem__(self, ij: tuple[int, int]) -> TruncatedSeries:
        i, j = ij
        return self.entries[i][j]

    def with_provenance(self, level: int | None, side: Side | None) -> SeriesMatrix:
        return SeriesMatrix(self.p, self.x_prec, self.entries, level, side)

    def replace(self, i: int, j: int, f: TruncatedSeries) -> SeriesMatrix:
        rows = [list(r) for r in self.entries]
        rows[i][j] = f
        return SeriesMatrix.of(rows, self.p, self.x_prec, self.level, self.side)

    def _check(self, other: SeriesMatrix) -> None:
        if not isinstance(other, SeriesMatrix):
            raise UsageError(f"expected SeriesMatrix, got {type(other).__name__}")
        if other.p != self.p or other.g != self.g:
            raise UsageError(f"matrix mismatch: (p={self.p}, g={self.g}) vs (p={other.p}, g={other.g})")

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------

    def __matmul__(self, other: SeriesMatrix) -> SeriesMatrix:
        self._check(other)
        d = min(self.x_prec, other.x_prec)
        g = self.g
        cols = list(zip(*other.entries))
        rows = []
        for row in self.entries:
            out = []
            for col in cols:
                acc = row[0] * col[0]
                for k in range(1, g):
                    acc = acc + row[k] * col[k]
                out.append(acc.truncate(d))
            rows.append(out)
        return SeriesMatrix.of(rows, self.p, d)

    def __add__(self, other: SeriesMatrix) -> SeriesMatrix:
        self._check(other)
        rows = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        return SeriesMatrix.of(rows, self.p, min(self.x_prec, other.x_prec))

    def __sub__(self, other: SeriesMatrix) -> SeriesMatrix:
        self._check(other)
        rows = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        return SeriesMatrix.of(rows, self.p, min(self.x_prec, other.x_prec))

    def transpose(self) -> SeriesMatrix:
        return SeriesMatrix.of([list(c) for c in zip(*self.entries)], self.p, self.x_prec, self.level, self.side)

    def shift(self, k: int) -> SeriesMatrix:
        """Multiply every entry by p^k (one shared denominator move)."""
        rows = [[f.shift(k) for f in row] for row in self.entries]
        return SeriesMatrix.of(rows, self.p, self.x_prec, self.level, self.side)

    def apply(self, vector: Sequence[TruncatedSeries]) -> list[TruncatedSeries]:
        """Matrix times column vector."""
        if len(vector) != self.g:
            raise UsageError(f"vector of length {len(vector)} for a {self.g}x{self.g} matrix")
        out = []
        for row in self.entries:
            acc = row[0] * vector[0]
            for a, b in zip(row[1:], vector[1:]):
                acc = acc + a * b
            out.append(acc)
        return out

    def det(self) -> TruncatedSeries:
        """Determinant by Bird's division-free algorithm.

        F_1 = A, F_{k+1} = mu(F_k) A, det A = (-1)^(g-1) F_g[0][0], where mu(X)
        keeps the strict upper triangle, zeroes the lower one and puts
        -sum_{j>i} X[j][j] on the diagonal. Only ring operations are used, so
        series with non-unit constant terms are fine.
        """
        g = self.g
        if g == 0:
            raise UsageError("determinant of a 0x0 series matrix needs an explicit precision")
        top = max(f.p_prec for row in self.entries for f in row)
        zero = TruncatedSeries.zero(self.p, self.x_prec, top)
        current = self
        for _ in range(g - 1):
            current = _bird_mu(current, zero) @ self
        d = current.entries[0][0]
        return -d if g % 2 == 0 else d

    # ------------------------------------------------------------------
    # Comparison
    # ------------------------------------------------------------------

    def first_difference(self, other: SeriesMatrix) -> EntryWitness | None:
        self._check(other)
        for i in range(self.g):
            for j in range(self.g):
                a, b = self.entries[i][j], other.entries[i][j]
                k = a.first_difference(b)
                if k is not None:
                    return EntryWitness(i, j, k, str(a.coefficient(k)), str(b.coefficient(k)))
        return None

    def congruent(self, other: SeriesMatrix) -> bool:
        return self.first_difference(other) is None

    def is_antidiagonal(self) -> bool:
        g = self.g
        return all(self.entries[i][j].is_zero for i in range(g) for j in range(g) if i + j != g - 1)

    def is_diagonal(self) -> bool:
        g = self.g
        return all(self.entries[i][j].is_zero for i in range(g) for j in range(g) if i != j)


def _bird_mu(m: SeriesMatrix, zero: TruncatedSeries) -> SeriesMatrix:
    g = m.g
    rows: list[list[TruncatedSeries]] = [[zero] * g for _ in range(g)]
    tail = zero
    for i in range(g - 1, -1, -1):
        rows[i][i] = -tail
        tail = tail + m.entries[i][i]
        for j in range(i + 1, g):
            rows[i][j] = m.entries[i][j]
    return SeriesMatrix.of(rows, m.p, m.x_prec)
