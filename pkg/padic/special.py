"""Special series: shifted cyclotomic polynomials and the logarithm family."""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb

from padic.errors import UsageError
from padic.scalar import PadicScalar, check_prime, padic_log, vp
from padic.series import TruncatedSeries

logger = logging.getLogger(__name__)


@lru_cache(maxsize=512)
def cyclotomic_shifted(p: int, n: int, x_prec: int, p_prec: int) -> TruncatedSeries:
    """Phi_{p^n}(1 + X) truncated at X^x_prec.

    Uses Phi_{p^n}(1 + X) = sum_{j=0}^{p-1} (1 + X)^{j p^(n-1)}, so every
    coefficient is a sum of binomials and no division is needed.
    """
    check_prime(p)
    if n < 1:
        raise UsageError(f"cyclotomic_shifted needs n >= 1, got {n}")
    step = p ** (n - 1)
    coeffs = [sum(comb(j * step, i) for j in range(p)) for i in range(x_prec + 1)]
    return TruncatedSeries.build(p, coeffs, x_prec, p_prec)


def log_over_px(p: int, x_prec: int, p_prec: int) -> TruncatedSeries:
    """log(1 + X) / (pX) = (1/p) * sum_k (-1)^k X^k / (k + 1).

    The shared denominator is ``p^(1 + max v_p(k + 1))`` over the visible
    coefficients; ``p_prec`` is the numerator precision.
    """
    top = max(vp(k + 1, p) for k in range(x_prec + 1))
    s = 1 + top
    modulus = p**p_prec
    coeffs = []
    for k in range(x_prec + 1):
        v = vp(k + 1, p)
        unit = (k + 1) // p**v
        c = p ** (s - 1 - v) * pow(unit, -1, modulus) if modulus > 1 else 0
        coeffs.append(c if k % 2 == 0 else -c)
    return TruncatedSeries.build(p, coeffs, x_prec, p_prec, denom_exp=s)


def partial_log_product(p: int, n: int, x_prec: int, p_prec: int) -> TruncatedSeries:
    """prod_{k=1}^n Phi_{p^k}(1 + X) / p^(n+1), the level-n approximation of log(1+X)/(pX)."""
    if n < 1:
        raise UsageError(f"partial_log_product needs n >= 1, got {n}")
    acc = cyclotomic_shifted(p, 1, x_prec, p_prec)
    for k in range(2, n + 1):
        acc = acc * cyclotomic_shifted(p, k, x_prec, p_prec)
    return acc.shift(-(n + 1))


def ell_zero(p: int, x_prec: int, p_prec: int, u: PadicScalar | None = None) -> TruncatedSeries:
    """log(1 + X) / log_p(u), by default with u = 1 + p.

    The choice of u stands for chi(gamma) and is a convention, not data.
    """
    if u is None:
        u = PadicScalar.from_int(p, 1 + p, p_prec)
    log_u = padic_log(u)
    mercator = [Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, x_prec + 1)]
    series = TruncatedSeries.from_fractions(p, mercator, x_prec, p_prec)
    logger.debug(f"[special] ell_zero p={p} log_p(u) valuation={log_u.valuation}")
    return series.scale(log_u.invert())
