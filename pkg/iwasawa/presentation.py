"""Square presentations of torsion Lambda^1-modules and their characteristic series."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from logmatrix.series_matrix import SeriesMatrix
from padic.errors import TorsionError, UsageError, ValidationError
from padic.series import TruncatedSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModulePresentation:
    matrix: SeriesMatrix

    def __post_init__(self) -> None:
        if self.matrix.g == 0:
            raise UsageError("a presentation needs at least one relation")
        for row in self.matrix.entries:
            for f in row:
                if not f.is_integral:
                    raise ValidationError("presentation entries must lie in Z_p[[X]]")

    @classmethod
    def of(cls, rows: Sequence[Sequence[TruncatedSeries]]) -> ModulePresentation:
        first = rows[0][0]
        return cls(SeriesMatrix.of(rows, first.p, first.x_prec))

    @classmethod
    def diagonal(cls, entries: Sequence[TruncatedSeries]) -> ModulePresentation:
        """Lambda^1/(f_1) + ... + Lambda^1/(f_r)."""
        if not entries:
            raise UsageError("a presentation needs at least one relation")
        rows = []
        for i, f in enumerate(entries):
            zero = TruncatedSeries.zero(f.p, f.x_prec, f.p_prec)
            rows.append([f if j == i else zero for j in range(len(entries))])
        return cls.of(rows)

    @classmethod
    def block_diagonal(cls, blocks: Sequence[ModulePresentation]) -> ModulePresentation:
        if not blocks:
            raise UsageError("block_diagonal needs at least one block")
        size = sum(b.size for b in blocks)
        top = max(f.p_prec for b in blocks for row in b.matrix.entries for f in row)
        p, x_prec = blocks[0].matrix.p, min(b.matrix.x_prec for b in blocks)
        zero = TruncatedSeries.zero(p, x_prec, top)
        rows = [[zero] * size for _ in range(size)]
        offset = 0
        for b in blocks:
            for i, row in enumerate(b.matrix.entries):
                for j, f in enumerate(row):
                    rows[offset + i][offset + j] = f.truncate(x_prec)
            offset += b.size
        return cls.of(rows)

    @property
    def size(self) -> int:
        return self.matrix.g

    @property
    def torsion_certificate(self) -> bool:
        """The determinant is not zero at the working precision."""
        return not self.matrix.det().is_zero


def char_poly(presentation: ModulePresentation) -> TruncatedSeries:
    """Characteristic series: the determinant of the presentation matrix."""
    det = presentation.matrix.det()
    if det.is_zero:
        raise TorsionError(
            f"determinant vanishes mod p^{det.p_prec}: cannot certify the module is torsion",
            deficit=1,
        )
    logger.debug(f"[presentation] r={presentation.size} det valuation={det.valuation()[0]}")
    return det
