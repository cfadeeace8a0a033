"""Block factors C_n / C*_n and the logarithmic matrices M_n / M*_n.

    M_n = (C_phi)^(n+1) C_n ... C_1

The chain C_n ... C_1 is accumulated right to left and stays integral. The
scalar power is applied last as ``(C Q)^(n+1)`` followed by one shift by
``-(n+1)``, where ``Q`` is ``diag(p off the scaled block, 1 on it)`` so that
``C_phi = p^-1 C Q``.
"""

from __future__ import annotations

import logging
from typing import Iterator, Sequence

from config.settings import settings
from logmatrix.frobenius import FrobeniusData, Side, oriented
from logmatrix.series_matrix import SeriesMatrix
from padic.errors import PrecisionError, UsageError
from padic.linalg import identity, inverse_mod, mat_mul_mod
from padic.series import TruncatedSeries
from padic.special import cyclotomic_shifted

logger = logging.getLogger(__name__)


def working_precision(fd: FrobeniusData, p_prec: int) -> int:
    """C is only known mod p^fd.prec; nothing downstream can be finer."""
    if p_prec > fd.prec:
        logger.warning(f"[logmatrix] N={p_prec} exceeds the precision of C; working at N={fd.prec}")
    return min(p_prec, fd.prec)


def _check_level(n: int, p_prec: int) -> None:
    if n < 1:
        raise UsageError(f"level n must be >= 1, got {n}")
    if p_prec <= n + 1:
        raise PrecisionError(
            f"N={p_prec} cannot absorb the p^{n + 1} denominator of M_{n}", deficit=n + 2 - p_prec
        )


def block_factor(fd: FrobeniusData, n: int, side: Side, x_prec: int, p_prec: int) -> SeriesMatrix:
    """C_n = S_n C^-1 (primal) or C*_n = S*_n C^t (dual), S carrying Phi_{p^n}(1+X) on the scaled block."""
    if n < 1:
        raise UsageError(f"block_factor needs n >= 1, got {n}")
    f = oriented(fd, side)
    p = f.p
    N = working_precision(f, p_prec)
    inv = inverse_mod([list(r) for r in f.C], p, N) if f.g else []
    phi = cyclotomic_shifted(p, n, x_prec, N)
    block = set(f.scaled_block)
    rows = []
    for i, row in enumerate(inv):
        if i in block:
            rows.append([phi.scale_int(c) for c in row])
        else:
            rows.append([TruncatedSeries.build(p, [c], x_prec, N) for c in row])
    return SeriesMatrix.of(rows, p, x_prec, level=n, side=Side(side))


def scaled_frobenius(fd: FrobeniusData, side: Side, p_prec: int) -> list[list[int]]:
    """C Q = p C_phi, an integer matrix mod p^N."""
    f = oriented(fd, side)
    block = set(f.scaled_block)
    modulus = f.p**p_prec
    return [[(x if j in block else x * f.p) % modulus for j, x in enumerate(row)] for row in f.C]


def assemble(
    fd: FrobeniusData,
    n: int,
    side: Side,
    chain: SeriesMatrix,
    p_prec: int,
) -> SeriesMatrix:
    """(C_phi)^(n+1) * chain, with chain = C_n ... C_1 already multiplied out."""
    N = working_precision(fd, p_prec)
    _check_level(n, N)
    base = scaled_frobenius(fd, side, N)
    power = identity(len(base))
    modulus = fd.p**N
    for _ in range(n + 1):
        power = mat_mul_mod(power, base, modulus)
    lead = SeriesMatrix.from_int_matrix(fd.p, power, chain.x_prec, N)
    return (lead @ chain).shift(-(n + 1)).with_provenance(n, Side(side))


def logarithmic_matrices(
    fd: FrobeniusData,
    n_max: int,
    side: Side = Side.PRIMAL,
    x_prec: int | None = None,
    p_prec: int | None = None,
) -> Iterator[SeriesMatrix]:
    """Yield M_1, ..., M_{n_max}, reusing one product chain.

    Raises PrecisionError (with ``deficit``) at the first level N cannot hold.
    """
    x_prec = x_prec if x_prec is not None else settings.default_x_prec(fd.p)
    N = working_precision(fd, p_prec if p_prec is not None else fd.prec)
    side = Side(side)
    f = oriented(fd, side)
    g = f.g
    modulus = f.p**N
    base = scaled_frobenius(f, side, N)
    power = base
    chain: SeriesMatrix | None = None
    for n in range(1, n_max + 1):
        _check_level(n, N)
        factor = block_factor(f, n, side, x_prec, N)
        chain = factor if chain is None else factor @ chain
        power = mat_mul_mod(power, base, modulus)
        if g == 0:
            yield SeriesMatrix.of([], f.p, x_prec, level=n, side=side)
            continue
        lead = SeriesMatrix.from_int_matrix(f.p, power, x_prec, N)
        m = (lead @ chain).shift(-(n + 1)).with_provenance(n, side)
        logger.debug(
            f"[logmatrix] M_{n} ({side.value}) p={f.p} g={g} D={x_prec} N={N} s={m.denominator_exp}"
        )
        yield m


def logarithmic_matrix(
    fd: FrobeniusData,
    n: int,
    side: Side = Side.PRIMAL,
    x_prec: int | None = None,
    p_prec: int | None = None,
) -> SeriesMatrix:
    """M_n (primal) or M*_n (dual)."""
    if n < 1:
        raise UsageError(f"level n must be >= 1, got {n}")
    result = None
    for result in logarithmic_matrices(fd, n, side, x_prec, p_prec):
        pass
    return result


def chain_of(factors: Sequence[SeriesMatrix]) -> SeriesMatrix:
    """C_n ... C_1 from factors listed as [C_1, ..., C_n]."""
    if not factors:
        raise UsageError("empty factor list")
    acc = factors[0]
    for f in factors[1:]:
        acc = f @ acc
    return acc
