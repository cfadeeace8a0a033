"""Elements of Lambda = Z_p[Delta][[X]] in their isotypic decomposition.

Component ``eta`` (an exponent mod p - 1 relative to a fixed generator of
Delta) holds the series ``e_eta * x``. Multiplication is componentwise.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

from padic.errors import UsageError
from padic.series import TruncatedSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IwasawaElement:
    p: int
    components: tuple[TruncatedSeries, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.p - 1:
            raise UsageError(f"expected {self.p - 1} isotypic components, got {len(self.components)}")
        if any(f.p != self.p for f in self.components) or len({f.x_prec for f in self.components}) > 1:
            raise UsageError("isotypic components must share p and x_prec")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def of(cls, p: int, components: Sequence[TruncatedSeries]) -> IwasawaElement:
        return cls(p=p, components=tuple(components))

    @classmethod
    def from_mapping(
        cls,
        p: int,
        components: Mapping[int, TruncatedSeries],
        x_prec: int,
        p_prec: int,
    ) -> IwasawaElement:
        """Missing characters are zero."""
        zero = TruncatedSeries.zero(p, x_prec, p_prec)
        slots = [zero] * (p - 1)
        for eta, f in components.items():
            slots[eta % (p - 1)] = f
        return cls.of(p, slots)

    @classmethod
    def constant(cls, f: TruncatedSeries) -> IwasawaElement:
        """``f`` in every component (the image of Lambda^1 in Lambda)."""
        return cls.of(f.p, [f] * (f.p - 1))

    @classmethod
    def zero(cls, p: int, x_prec: int, p_prec: int) -> IwasawaElement:
        return cls.constant(TruncatedSeries.zero(p, x_prec, p_prec))

    @classmethod
    def one(cls, p: int, x_prec: int, p_prec: int) -> IwasawaElement:
        return cls.constant(TruncatedSeries.one(p, x_prec, p_prec))

    # ------------------------------------------------------------------
    # Access and arithmetic
    # ------------------------------------------------------------------

    def component(self, eta: int) -> TruncatedSeries:
        return self.components[eta % (self.p - 1)]

    def _check(self, other: IwasawaElement) -> None:
        if not isinstance(other, IwasawaElement) or other.p != self.p:
            raise UsageError("Iwasawa elements over different primes")

    def __add__(self, other: IwasawaElement) -> IwasawaElement:
        self._check(other)
        return IwasawaElement.of(self.p, [a + b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> IwasawaElement:
        return IwasawaElement.of(self.p, [-a for a in self.components])

    def __sub__(self, other: IwasawaElement) -> IwasawaElement:
        self._check(other)
        return self + (-other)

    def __mul__(self, other: IwasawaElement) -> IwasawaElement:
        self._check(other)
        return IwasawaElement.of(self.p, [a * b for a, b in zip(self.components, other.components)])

    def congruent(self, other: IwasawaElement) -> bool:
        self._check(other)
        return all(a.congruent(b) for a, b in zip(self.components, other.components))


def idempotent(p: int, eta: int, x_prec: int, p_prec: int) -> IwasawaElement:
    """e_eta: one in slot eta, zero elsewhere."""
    return IwasawaElement.from_mapping(p, {eta: TruncatedSeries.one(p, x_prec, p_prec)}, x_prec, p_prec)


def sigma_minus_one(e: IwasawaElement) -> IwasawaElement:
    """Action of the element of order two in Delta: eta(sigma_-1) = (-1)^eta."""
    return IwasawaElement.of(e.p, [f if eta % 2 == 0 else -f for eta, f in enumerate(e.components)])
