"""Frobenius data: the matrix C in GL_g(Z_p) and the block sizes g_-/g_+.

Basis convention: the first ``g_minus`` basis vectors span Fil^0, so on the
primal side the Frobenius matrix is ``C_phi = C * diag(I_{g_-}, (1/p) I_{g_+})``.
The dual side stores ``(C^-1)^t`` and scales the *first* block instead:
``C*_phi = (C^-1)^t * diag((1/p) I_{g_-}, I_{g_+})``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from config.settings import settings
from padic.errors import UsageError, ValidationError
from padic.linalg import check_square, det_bareiss, inverse_mod, transpose
from padic.scalar import PadicScalar, check_prime, vp

logger = logging.getLogger(__name__)


class Side(str, Enum):
    """Which logarithmic matrix: M_n for T, or M*_n for the dual T*(1)."""
    PRIMAL = "primal"
    DUAL = "dual"

    @property
    def other(self) -> Side:
        return Side.DUAL if self is Side.PRIMAL else Side.PRIMAL


@dataclass(frozen=True)
class FrobeniusData:
    p: int
    g_plus: int
    g_minus: int
    C: tuple[tuple[int, ...], ...]   # residues mod p^prec
    prec: int
    side: Side = Side.PRIMAL
    fil0_first: bool = True          # v_1..v_{g_-} span Fil^0

    @property
    def g(self) -> int:
        return self.g_plus + self.g_minus

    @property
    def scaled_block(self) -> range:
        """Indices carrying the 1/p in C_phi and the Phi_{p^n} in C_n."""
        if self.side is Side.PRIMAL:
            return range(self.g_minus, self.g)
        return range(0, self.g_minus)

    def c_scalars(self) -> list[list[PadicScalar]]:
        return [[PadicScalar.from_residue(self.p, x, self.prec) for x in row] for row in self.C]

    def determinant(self) -> PadicScalar:
        return PadicScalar.from_residue(self.p, det_bareiss([list(r) for r in self.C]), self.prec)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def _as_residue(entry: int | PadicScalar, p: int, prec: int) -> tuple[int, int]:
    """(residue, usable precision) for one matrix entry."""
    if isinstance(entry, PadicScalar):
        if entry.p != p:
            raise UsageError(f"prime mismatch in C: {entry.p} vs {p}")
        if not entry.is_exact_zero and entry.valuation < 0:
            raise ValidationError(f"entry {entry} of C is not integral")
        top = prec if entry.is_exact_zero else min(prec, entry.absolute_precision)
        return entry.residue(top), top
    if isinstance(entry, bool) or not isinstance(entry, int):
        raise UsageError(f"C entries must be integers or PadicScalar, got {type(entry).__name__}")
    return entry % p**prec, prec


def build_frobenius(
    C: Sequence[Sequence[int | PadicScalar]],
    g_minus: int,
    g_plus: int,
    p: int,
    prec: int | None = None,
) -> FrobeniusData:
    """Validate C and wrap it; C_phi = C * diag(I_{g_-}, (1/p) I_{g_+})."""
    check_prime(p)
    if g_minus < 0 or g_plus < 0:
        raise UsageError("g_minus and g_plus must be non-negative")
    prec = prec or settings.DEFAULT_P_PREC
    rows = [list(r) for r in C]
    g = check_square(rows) if rows else 0
    if g != g_minus + g_plus:
        raise UsageError(f"C is {g}x{g} but g_minus + g_plus = {g_minus + g_plus}")

    top = prec
    residues: list[list[int]] = []
    for row in rows:
        converted = [_as_residue(x, p, prec) for x in row]
        top = min([top] + [t for _, t in converted])
        residues.append([x for x, _ in converted])
    modulus = p**top
    residues = [[x % modulus for x in row] for row in residues]

    det = det_bareiss(residues)
    if g and vp(det, p, top) != 0:
        raise ValidationError(
            f"det(C) = {det} has positive {p}-adic valuation; C must lie in GL_{g}(Z_{p})"
        )
    logger.debug(f"[frobenius] built p={p} g_-={g_minus} g_+={g_plus} prec={top}")
    return FrobeniusData(
        p=p,
        g_plus=g_plus,
        g_minus=g_minus,
        C=tuple(tuple(r) for r in residues),
        prec=top,
    )


def build_frobenius_from_ap(a_p: int | PadicScalar, p: int, prec: int | None = None) -> FrobeniusData:
    """Supersingular g = 2 data with C = [[a_p, -1], [1, 0]] (det C = 1).

    Requires v_p(a_p) >= 1; a unit a_p violates the Frobenius slope hypothesis.
    """
    prec = prec or settings.DEFAULT_P_PREC
    if isinstance(a_p, PadicScalar):
        supersingular = a_p.is_exact_zero or a_p.valuation >= 1
    else:
        supersingular = a_p == 0 or vp(a_p, p) >= 1
    if not supersingular:
        raise ValidationError(
            f"a_p = {a_p} is a {p}-adic unit: the Frobenius slope hypothesis needs v_p(a_p) >= 1"
        )
    return build_frobenius([[a_p, -1], [1, 0]], g_minus=1, g_plus=1, p=p, prec=prec)


def dual_frobenius(fd: FrobeniusData) -> FrobeniusData:
    """Data of T*(1): C*_phi = (1/p) (C_phi^-1)^t = (C^-1)^t diag((1/p) I_{g_-}, I_{g_+})."""
    inv = inverse_mod([list(r) for r in fd.C], fd.p, fd.prec) if fd.g else []
    return FrobeniusData(
        p=fd.p,
        g_plus=fd.g_plus,
        g_minus=fd.g_minus,
        C=tuple(tuple(r) for r in transpose(inv)),
        prec=fd.prec,
        side=fd.side.other,
        fil0_first=fd.fil0_first,
    )


def oriented(fd: FrobeniusData, side: Side) -> FrobeniusData:
    """``fd`` itself or its dual, whichever sits on ``side``."""
    return fd if fd.side is Side(side) else dual_frobenius(fd)


def frobenius_matrix(fd: FrobeniusData) -> list[list[PadicScalar]]:
    """C_phi as a g x g matrix over Q_p: the scaled block's columns carry 1/p."""
    block = set(fd.scaled_block)
    out = []
    for row in fd.c_scalars():
        out.append([x.shift(-1) if j in block else x for j, x in enumerate(row)])
    return out


def random_frobenius(
    p: int,
    g_minus: int,
    g_plus: int,
    rng: random.Random,
    prec: int | None = None,
) -> FrobeniusData:
    """Uniform entries mod p^prec, rejection-sampled until det(C) is a unit."""
    prec = prec or settings.DEFAULT_P_PREC
    g = g_minus + g_plus
    modulus = p**prec
    attempts = 0
    while True:
        attempts += 1
        C = [[rng.randrange(modulus) for _ in range(g)] for _ in range(g)]
        if g == 0 or det_bareiss(C) % p != 0:
            logger.debug(f"[frobenius] random C accepted after {attempts} draw(s)")
            return build_frobenius(C, g_minus, g_plus, p, prec)
