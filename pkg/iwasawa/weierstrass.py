"""Weierstrass preparation f = p^mu * P * U in Z_p[[X]] at finite precision.

Precision accounting:

  - f is known mod (p^N, X^(D+1)); after dividing out p^mu the numerators are
    known mod p^(N - mu).
  - The distinguished polynomial P of the truncated polynomial differs from
    that of f by a remainder of X^(D+1) * (...) modulo P, which is divisible by
    p^floor((D+1)/lambda). P is therefore reported mod p^min(N - mu, floor((D+1)/lambda)).
  - The unit U is reported to X^(D - lambda).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from config.settings import settings
from padic.errors import InvariantError, PrecisionError, ValidationError
from padic.scalar import vp
from padic.series import TruncatedSeries, kronecker_multiply

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeierstrassData:
    p: int
    mu: int
    lambda_: int
    distinguished: tuple[int, ...]   # c_0 .. c_lambda, c_lambda = 1, residues mod p^precision
    precision: int
    unit: TruncatedSeries
    certified: bool

    def distinguished_series(self, x_prec: int) -> TruncatedSeries:
        return TruncatedSeries.build(self.p, self.distinguished, max(x_prec, self.lambda_), self.precision)

    def congruent_distinguished(self, other: WeierstrassData) -> int | None:
        """Index of the first coefficient where the two polynomials differ, or None."""
        if other.lambda_ != self.lambda_:
            return min(self.lambda_, other.lambda_)
        modulus = self.p ** min(self.precision, other.precision)
        for i, (a, b) in enumerate(zip(self.distinguished, other.distinguished)):
            if (a - b) % modulus:
                return i
        return None


def _inverse(a: list[int], length: int, modulus: int) -> list[int]:
    b0 = pow(a[0], -1, modulus)
    b = [b0]
    for k in range(1, length):
        acc = sum(a[j] * b[k - j] for j in range(1, min(k, len(a) - 1) + 1))
        b.append(-b0 * acc % modulus)
    return b


def weierstrass(f: TruncatedSeries) -> WeierstrassData:
    """Prepare ``f``; raises PrecisionError when (mu, lambda) cannot be certified."""
    p, D = f.p, f.x_prec
    if not f.is_integral:
        raise ValidationError(f"f is not in Z_p[[X]]: it carries a denominator p^{f.denom_exp}")
    if f.is_zero:
        raise PrecisionError(f"f is zero mod p^{f.p_prec}: mu and lambda are undecidable", deficit=1)

    vals = [vp(c, p, f.p_prec) for c in f.coeffs]
    mu = min(vals)
    lam = vals.index(mu)
    if lam >= D:
        raise PrecisionError(
            f"lambda = {lam} reaches x_prec = {D}; the unit factor would have no known coefficient",
            deficit=lam - D + 1,
        )
    N = f.p_prec - mu
    modulus = p**N
    scale = p**mu
    logger.debug(f"[weierstrass] p={p} D={D} N={f.p_prec} mu={mu} lambda={lam}")

    if lam == 0:
        unit = TruncatedSeries.build(p, [c // scale for c in f.coeffs], D, N)
        return WeierstrassData(p=p, mu=mu, lambda_=0, distinguished=(1,), precision=N, unit=unit, certified=True)

    # Treat the truncation as an exact polynomial. Cutting q off at X^width
    # corrupts index j only by p^k with j >= width - (k + 1) lambda, so this
    # width keeps q exact mod p^prec_p through X^(D - lambda).
    prec_p = min(N, (D + 1) // lam)
    width = D + (prec_p + 2) * lam + 1
    h = [c // scale for c in f.coeffs] + [0] * (width - D - 1)
    low = h[:lam]
    b = h[lam:]
    b_inv = _inverse(b, width - lam, modulus)

    q = b_inv
    rounds = 0
    limit = min(N + 2, settings.WEIERSTRASS_MAX_ROUNDS)
    while True:
        rounds += 1
        qa = kronecker_multiply(q, low, width, modulus)
        t = [(-c) % modulus for c in qa]
        t[lam] = (t[lam] + 1) % modulus
        q_next = kronecker_multiply(b_inv, t[lam:], width - lam, modulus)
        if q_next == q:
            break
        q = q_next
        if rounds > limit:
            raise InvariantError(f"Weierstrass division did not settle after {rounds} rounds")

    qh = kronecker_multiply(q, h, lam + 1, modulus)
    p_modulus = p**prec_p
    distinguished = tuple(c % p_modulus for c in qh[: lam + 1])

    is_monic = distinguished[lam] % p_modulus == 1 % p_modulus
    is_distinguished = all(c % p == 0 for c in distinguished[:lam]) if prec_p >= 1 else False
    unit_coeffs = _inverse(q, D - lam + 1, modulus)
    unit = TruncatedSeries.build(p, unit_coeffs, D - lam, prec_p)

    # p^mu P U must give back f wherever both are known
    check_len = D - lam + 1
    rebuilt = kronecker_multiply(list(qh[: lam + 1]), unit_coeffs, check_len, modulus)
    residual_ok = all((r - c) % p_modulus == 0 for r, c in zip(rebuilt, h[:check_len]))
    certified = is_monic and is_distinguished and residual_ok
    if not certified:
        logger.warning(
            f"[weierstrass] certification failed: monic={is_monic} distinguished={is_distinguished} "
            f"residual={residual_ok}"
        )
    logger.info(f"[weierstrass] mu={mu} lambda={lam} P mod p^{prec_p} after {rounds} round(s)")
    return WeierstrassData(
        p=p,
        mu=mu,
        lambda_=lam,
        distinguished=distinguished,
        precision=prec_p,
        unit=unit,
        certified=certified,
    )
