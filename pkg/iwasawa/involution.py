"""The involution iota induced by sigma -> sigma^-1."""

from __future__ import annotations

from typing import overload

from iwasawa.element import IwasawaElement
from padic.errors import UsageError
from padic.series import TruncatedSeries


def iota_substitution(p: int, x_prec: int, p_prec: int) -> TruncatedSeries:
    """(1 + X)^-1 - 1 = -X + X^2 - X^3 + ..."""
    return TruncatedSeries.build(p, [0] + [(-1) ** k for k in range(1, x_prec + 1)], x_prec, p_prec)


@overload
def involution_iota(f: TruncatedSeries) -> TruncatedSeries: ...
@overload
def involution_iota(f: IwasawaElement) -> IwasawaElement: ...


def involution_iota(f):
    """X -> (1+X)^-1 - 1 on Lambda^1; on Lambda also eta -> -eta."""
    if isinstance(f, TruncatedSeries):
        return f.compose(iota_substitution(f.p, f.x_prec, f.p_prec))
    if isinstance(f, IwasawaElement):
        p = f.p
        return IwasawaElement.of(p, [involution_iota(f.component(-eta)) for eta in range(p - 1)])
    raise UsageError(f"iota is defined on series and Iwasawa elements, not {type(f).__name__}")


def dual_twist(f: TruncatedSeries, e: int) -> TruncatedSeries:
    """(f^e)^iota, generator of the characteristic ideal of Lambda^1 / (f^e)^iota."""
    if e < 0:
        raise UsageError(f"exponent must be non-negative, got {e}")
    return involution_iota(f**e)
