"""Characteristic-ideal comparison of X with the iota-twist of Y."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from iwasawa.involution import involution_iota
from iwasawa.weierstrass import WeierstrassData, weierstrass
from padic.errors import PrecisionError
from padic.series import TruncatedSeries

logger = logging.getLogger(__name__)


@dataclass
class ComparisonReport:
    passed: bool
    mu: tuple[int, int]
    lambda_: tuple[int, int]
    precision: int                   # distinguished polynomials compared mod p^precision
    witness: dict | None = None

    def as_dict(self) -> dict:
        out: dict = {
            "check": "functional-equation",
            "pass": self.passed,
            "mu": list(self.mu),
            "lambda": list(self.lambda_),
            "precision": self.precision,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

def _witness(wx: WeierstrassData, wy: WeierstrassData) -> dict | None:
    if wx.mu != wy.mu:
        return {"field": "mu", "left": wx.mu, "right": wy.mu}
    if wx.lambda_ != wy.lambda_:
        return {"field": "lambda", "left": wx.lambda_, "right": wy.lambda_}
    k = wx.congruent_distinguished(wy)
    if k is not None:
        return {
            "field": "distinguished",
            "coefficient": k,
            "left": str(wx.distinguished[k]),
            "right": str(wy.distinguished[k]),
            "modulus": f"{wx.p}^{min(wx.precision, wy.precision)}",
        }
    return None


def functional_equation_compare(f_x: TruncatedSeries, f_y: TruncatedSeries) -> ComparisonReport:
    """Pass iff f_x and iota(f_y) share mu, lambda and distinguished polynomial.

    That is equality of characteristic ideals up to a unit of Lambda^1.
    Raises PrecisionError when either preparation is uncertified.
    """
    wx = weierstrass(f_x)
    wy = weierstrass(involution_iota(f_y))
    for label, w in (("f_x", wx), ("iota(f_y)", wy)):
        if not w.certified:
            raise PrecisionError(f"Weierstrass data of {label} is not certified mod {w.p}^{w.precision}", deficit=1)
    witness = _witness(wx, wy)
    report = ComparisonReport(
        passed=witness is None,
        mu=(wx.mu, wy.mu),
        lambda_=(wx.lambda_, wy.lambda_),
        precision=min(wx.precision, wy.precision),
        witness=witness,
    )
    logger.info(f"[compare] pass={report.passed} mu={report.mu} lambda={report.lambda_}")
    return report
