"""p-adic scalars with an explicit valuation and a relative precision window.

A ``PadicScalar`` stands for ``p^v * unit`` known modulo ``p^(v + N)``.
Two different zeros exist and are never confused:

  - exact zero: valuation is ``EXACT_ZERO`` (+inf), absorbs products;
  - precision-zero: ``precision == 0``, i.e. the value is only known to lie in
    ``p^v Z_p``.

Operations needing to tell them apart (inversion) raise instead of guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from padic.errors import DomainError, UsageError

EXACT_ZERO = math.inf


def vp(x: int, p: int, cap: int | None = None) -> int:
    """p-adic valuation of a non-zero integer, optionally capped.

    ``vp(0, p, cap)`` returns ``cap``; without a cap it raises.
    """
    if x == 0:
        if cap is None:
            raise DomainError("valuation of 0 is infinite")
        return cap
    v = 0
    while x % p == 0:
        x //= p
        v += 1
        if cap is not None and v >= cap:
            return cap
    return v


def check_prime(p: int) -> None:
    """Raise UsageError unless ``p`` is an odd prime."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 3 or not isprime(p):
        raise UsageError(f"p must be an odd prime, got {p!r}")


@dataclass(frozen=True)
class PadicScalar:
    p: int
    unit: int
    valuation: int | float
    precision: int

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def exact_zero(cls, p: int) -> PadicScalar:
        check_prime(p)
        return cls(p=p, unit=0, valuation=EXACT_ZERO, precision=0)

    @classmethod
    def precision_zero(cls, p: int, absolute_precision: int) -> PadicScalar:
        """A value known only to be divisible by ``p^absolute_precision``."""
        check_prime(p)
        return cls(p=p, unit=0, valuation=absolute_precision, precision=0)

    @classmethod
    def from_int(cls, p: int, x: int, precision: int) -> PadicScalar:
        """Integer ``x`` with ``precision`` known digits after its valuation."""
        check_prime(p)
        if x == 0:
            return cls.exact_zero(p)
        if precision <= 0:
            raise UsageError(f"precision must be positive, got {precision}")
        v = vp(x, p)
        return cls(p=p, unit=(x // p**v) % p**precision, valuation=v, precision=precision)

    @classmethod
    def from_fraction(cls, p: int, q: Fraction | int, precision: int) -> PadicScalar:
        check_prime(p)
        q = Fraction(q)
        if q == 0:
            return cls.exact_zero(p)
        if precision <= 0:
            raise UsageError(f"precision must be positive, got {precision}")
        vn = vp(q.numerator, p)
        vd = vp(q.denominator, p)
        modulus = p**precision
        num = (q.numerator // p**vn) % modulus
        den = (q.denominator // p**vd) % modulus
        return cls(p=p, unit=num * pow(den, -1, modulus) % modulus, valuation=vn - vd, precision=precision)

    @classmethod
    def from_residue(cls, p: int, x: int, absolute_precision: int) -> PadicScalar:
        """An integer known modulo ``p^absolute_precision``; a zero residue is precision-zero."""
        check_prime(p)
        return _normalized(p, x, 0, absolute_precision)

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    @property
    def is_exact_zero(self) -> bool:
        return self.valuation == EXACT_ZERO

    @property
    def is_zero(self) -> bool:
        """True for exact zero and for values indistinguishable from zero."""
        return self.is_exact_zero or self.precision == 0

    @property
    def is_unit(self) -> bool:
        return self.valuation == 0 and self.precision > 0

    @property
    def absolute_precision(self) -> int | float:
        if self.is_exact_zero:
            return math.inf
        return self.valuation + self.precision

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _same_prime(self, other: PadicScalar) -> None:
        if not isinstance(other, PadicScalar):
            raise UsageError(f"expected PadicScalar, got {type(other).__name__}")
        if other.p != self.p:
            raise UsageError(f"prime mismatch: {self.p} vs {other.p}")

    def __add__(self, other: PadicScalar) -> PadicScalar:
        self._same_prime(other)
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        p = self.p
        top = min(self.absolute_precision, other.absolute_precision)
        v0 = min(self.valuation, other.valuation)
        width = top - v0
        x = self.unit * p ** (self.valuation - v0) + other.unit * p ** (other.valuation - v0)
        return _normalized(p, x, v0, width)

    def __neg__(self) -> PadicScalar:
        if self.is_zero:
            return self
        return PadicScalar(self.p, (-self.unit) % self.p**self.precision, self.valuation, self.precision)

    def __sub__(self, other: PadicScalar) -> PadicScalar:
        self._same_prime(other)
        return self + (-other)

    def __mul__(self, other: PadicScalar) -> PadicScalar:
        self._same_prime(other)
        if self.is_exact_zero or other.is_exact_zero:
            return PadicScalar.exact_zero(self.p)
        v = self.valuation + other.valuation
        n = min(self.precision, other.precision)
        if n == 0:
            return PadicScalar.precision_zero(self.p, v)
        return PadicScalar(self.p, self.unit * other.unit % self.p**n, v, n)

    def invert(self) -> PadicScalar:
        if self.is_exact_zero:
            raise DomainError("cannot invert exact zero")
        if self.precision == 0:
            raise DomainError(
                f"cannot invert a value indistinguishable from zero mod {self.p}^{self.valuation}"
            )
        modulus = self.p**self.precision
        return PadicScalar(self.p, pow(self.unit, -1, modulus), -self.valuation, self.precision)

    def __truediv__(self, other: PadicScalar) -> PadicScalar:
        self._same_prime(other)
        return self * other.invert()

    def shift(self, k: int) -> PadicScalar:
        """Multiply by ``p^k`` (exact, no precision change)."""
        if self.is_exact_zero:
            return self
        return PadicScalar(self.p, self.unit, self.valuation + k, self.precision)

    # ------------------------------------------------------------------
    # Conversions
    # ------------------------------------------------------------------

    def to_fraction(self) -> Fraction:
        """The stored representative as a rational number."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.valuation

    def residue(self, absolute_precision: int) -> int:
        """Integer representative modulo ``p^absolute_precision`` (needs valuation >= 0)."""
        if self.is_zero:
            return 0
        if self.valuation < 0:
            raise DomainError(f"{self} is not integral")
        return self.unit * self.p**self.valuation % self.p**absolute_precision

    def __str__(self) -> str:
        if self.is_exact_zero:
            return "0"
        if self.precision == 0:
            return f"O({self.p}^{self.valuation})"
        return f"{self.p}^{self.valuation}*{self.unit} + O({self.p}^{self.absolute_precision})"


def _normalized(p: int, x: int, v0: int | float, width: int | float) -> PadicScalar:
    """Build ``p^v0 * x`` known mod ``p^(v0 + width)``, pulling out the valuation of ``x``."""
    modulus = p**width
    x %= modulus
    if x == 0:
        return PadicScalar.precision_zero(p, v0 + width)
    k = vp(x, p)
    return PadicScalar(p, (x // p**k) % p ** (width - k), v0 + k, width - k)


def padic_log(u: PadicScalar) -> PadicScalar:
    """p-adic logarithm of a principal unit ``u = 1 + t`` with ``v(t) >= 1``.

    The result is known modulo ``p^N`` where ``N`` is the absolute precision of ``u``.
    """
    if not u.is_unit or u.unit % u.p != 1:
        raise DomainError(f"padic_log needs a unit congruent to 1 mod {u.p}, got {u}")
    p = u.p
    top = u.precision
    t = (u.unit - 1) % p**top
    if t == 0:
        return PadicScalar.precision_zero(p, top)
    total = Fraction(0)
    k = 1
    # v(t^k / k) >= k - v_p(k); once that passes top the tail is invisible
    while k - _ilog(k, p) < top + 1:
        term = Fraction(t**k, k)
        total += term if k % 2 == 1 else -term
        k += 1
    return _normalized(p, total.numerator * pow(total.denominator, -1, p**top), 0, top)


def _ilog(k: int, p: int) -> int:
    """floor(log_p(k)) for k >= 1."""
    e = 0
    while k >= p:
        k //= p
        e += 1
    return e
