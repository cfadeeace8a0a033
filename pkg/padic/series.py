"""Truncated power series over Q_p.

A ``TruncatedSeries`` is ``p^(-s) * sum(c_i X^i, i = 0..D)`` where every ``c_i``
is an integer known modulo ``p^N``.  The value is therefore known modulo
``(p^(N - s), X^(D + 1))``.  One denominator exponent covers the whole series.

Normal form: either ``s == 0`` or at least one ``c_i`` is a p-adic unit.
Every constructor and operation returns a normalized value.

Precision is propagated pessimistically:

  - sums keep the smaller absolute precision;
  - products keep ``min(N_f + v(g), N_g + v(f))`` on the numerators, where
    ``v`` is the smallest coefficient valuation;
  - normalization drops the digits divided out of a shared factor ``p``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from padic.errors import DomainError, PrecisionError, UsageError
from padic.scalar import PadicScalar, check_prime, vp

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Coefficient-array kernels
# ---------------------------------------------------------------------------

def _pack(coeffs: list[int], width: int) -> int:
    packed = 0
    for c in reversed(coeffs):
        packed = (packed << width) | c
    return packed


def kronecker_multiply(a: list[int], b: list[int], count: int, modulus: int) -> list[int]:
    """First ``count`` coefficients of ``a * b`` reduced mod ``modulus``.

    Inputs must be non-negative.  Both arrays are packed into one integer each
    with slots wide enough that no carry crosses a slot, multiplied once, and
    unpacked.
    """
    while a and a[-1] == 0:
        a = a[:-1]
    while b and b[-1] == 0:
        b = b[:-1]
    if not a or not b:
        return [0] * count
    if len(a) == 1 or len(b) == 1:
        k, other = (a[0], b) if len(a) == 1 else (b[0], a)
        out = [c * k % modulus for c in other[:count]]
        return out + [0] * (count - len(out))

    bound = min(len(a), len(b)) * max(a) * max(b)
    width = bound.bit_length() + 1
    product = _pack(a[:count], width) * _pack(b[:count], width)
    mask = (1 << width) - 1
    out = []
    for _ in range(count):
        out.append((product & mask) % modulus)
        product >>= width
    return out


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    p: int
    denom_exp: int
    p_prec: int
    x_prec: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.x_prec + 1:
            raise UsageError(
                f"expected {self.x_prec + 1} coefficients for x_prec={self.x_prec}, got {len(self.coeffs)}"
            )
        if self.denom_exp < 0 or self.p_prec < 0 or self.x_prec < 0:
            raise UsageError("denom_exp, p_prec and x_prec must be non-negative")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def build(
        cls,
        p: int,
        coeffs: list[int] | tuple[int, ...],
        x_prec: int,
        p_prec: int,
        denom_exp: int = 0,
    ) -> TruncatedSeries:
        """Normalize raw numerators; pads with zeros or truncates to ``x_prec``."""
        check_prime(p)
        if p_prec < 0 or denom_exp < 0 or x_prec < 0:
            raise UsageError("precisions and denominator exponent must be non-negative")
        modulus = p**p_prec
        c = [int(x) % modulus for x in list(coeffs)[: x_prec + 1]]
        c += [0] * (x_prec + 1 - len(c))
        s, n = denom_exp, p_prec
        while s > 0 and all(x % p == 0 for x in c):
            if n == 0:
                raise PrecisionError(
                    f"series p^-{s}*(...) has no certain p-adic digit left", deficit=s
                )
            c = [x // p for x in c]
            s -= 1
            n -= 1
        return cls(p=p, denom_exp=s, p_prec=n, x_prec=x_prec, coeffs=tuple(c))

    @classmethod
    def zero(cls, p: int, x_prec: int, p_prec: int) -> TruncatedSeries:
        return cls.build(p, [], x_prec, p_prec)

    @classmethod
    def one(cls, p: int, x_prec: int, p_prec: int) -> TruncatedSeries:
        return cls.build(p, [1], x_prec, p_prec)

    @classmethod
    def variable(cls, p: int, x_prec: int, p_prec: int) -> TruncatedSeries:
        """The series ``X``."""
        return cls.build(p, [0, 1], x_prec, p_prec)

    @classmethod
    def constant(cls, scalar: PadicScalar, x_prec: int, p_prec: int) -> TruncatedSeries:
        p = scalar.p
        if scalar.is_exact_zero:
            return cls.zero(p, x_prec, p_prec)
        v = scalar.valuation
        if v >= 0:
            n = min(p_prec, v + scalar.precision)
            return cls.build(p, [scalar.unit * p**v], x_prec, n)
        return cls.build(p, [scalar.unit], x_prec, min(p_prec, scalar.precision), denom_exp=-v)

    @classmethod
    def from_fractions(
        cls,
        p: int,
        coeffs: list[Fraction | int],
        x_prec: int,
        absolute_precision: int,
    ) -> TruncatedSeries:
        """Rational coefficients, known modulo ``p^absolute_precision``."""
        fracs = [Fraction(q) for q in list(coeffs)[: x_prec + 1]]
        s = 0
        for q in fracs:
            if q:
                s = max(s, vp(q.denominator, p))
        n = absolute_precision + s
        if n < 0:
            raise PrecisionError(
                f"absolute precision {absolute_precision} cannot hold denominators p^{s}", deficit=-n
            )
        modulus = p**n
        nums = []
        for q in fracs:
            scaled = q * p**s
            nums.append(scaled.numerator * pow(scaled.denominator, -1, modulus) % modulus if modulus > 1 else 0)
        return cls.build(p, nums, x_prec, n, denom_exp=s)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def absolute_precision(self) -> int:
        return self.p_prec - self.denom_exp

    @property
    def is_zero(self) -> bool:
        """Zero at the tracked precision (there is no separate exact-zero series)."""
        return not any(self.coeffs)

    @property
    def is_integral(self) -> bool:
        return self.denom_exp == 0

    @cached_property
    def numerator_valuation(self) -> int:
        """Smallest valuation among the numerators, capped at ``p_prec``."""
        return min((vp(c, self.p, self.p_prec) for c in self.coeffs), default=self.p_prec)

    def valuation(self) -> tuple[int, bool]:
        """(minimal coefficient valuation, saturated).

        ``saturated`` means the series is zero at its precision and the returned
        number is only the absolute precision, a lower bound.
        """
        if self.is_zero:
            return self.absolute_precision, True
        return self.numerator_valuation - self.denom_exp, False

    def coefficient(self, i: int) -> Fraction:
        if i > self.x_prec:
            raise PrecisionError(f"coefficient X^{i} is beyond x_prec={self.x_prec}")
        return Fraction(self.coeffs[i], self.p**self.denom_exp)

    def coefficient_scalar(self, i: int) -> PadicScalar:
        c = PadicScalar.from_residue(self.p, self.coeffs[i], self.p_prec)
        return c.shift(-self.denom_exp)

    def degree(self) -> int:
        """Index of the last non-zero numerator, -1 for zero."""
        for i in range(self.x_prec, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise UsageError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.p != self.p:
            raise UsageError(f"prime mismatch: {self.p} vs {other.p}")

    def truncate(self, x_prec: int) -> TruncatedSeries:
        if x_prec >= self.x_prec:
            return self
        return TruncatedSeries.build(self.p, self.coeffs, x_prec, self.p_prec, self.denom_exp)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        d = min(self.x_prec, other.x_prec)
        s = max(self.denom_exp, other.denom_exp)
        lift_f = self.p ** (s - self.denom_exp)
        lift_g = self.p ** (s - other.denom_exp)
        n = min(self.p_prec + s - self.denom_exp, other.p_prec + s - other.denom_exp)
        coeffs = [a * lift_f + b * lift_g for a, b in zip(self.coeffs[: d + 1], other.coeffs[: d + 1])]
        return TruncatedSeries.build(self.p, coeffs, d, n, s)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries.build(self.p, [-c for c in self.coeffs], self.x_prec, self.p_prec, self.denom_exp)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return self + (-other)

    def __mul__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return self.scale_int(other)
        self._check(other)
        d = min(self.x_prec, other.x_prec)
        n = min(self.p_prec + other.numerator_valuation, other.p_prec + self.numerator_valuation)
        coeffs = kronecker_multiply(
            list(self.coeffs[: d + 1]), list(other.coeffs[: d + 1]), d + 1, self.p**n
        )
        return TruncatedSeries.build(self.p, coeffs, d, n, self.denom_exp + other.denom_exp)

    __rmul__ = __mul__

    def scale_int(self, k: int) -> TruncatedSeries:
        """Multiply by an exact integer."""
        if k == 0:
            return TruncatedSeries.zero(self.p, self.x_prec, self.p_prec)
        n = self.p_prec + vp(k, self.p)
        return TruncatedSeries.build(self.p, [c * k for c in self.coeffs], self.x_prec, n, self.denom_exp)

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by ``p^k``; negative ``k`` grows the denominator."""
        s = self.denom_exp - k
        if s >= 0:
            return TruncatedSeries.build(self.p, self.coeffs, self.x_prec, self.p_prec, s)
        lift = self.p ** (-s)
        return TruncatedSeries.build(self.p, [c * lift for c in self.coeffs], self.x_prec, self.p_prec - s, 0)

    def scale(self, scalar: PadicScalar) -> TruncatedSeries:
        if scalar.p != self.p:
            raise UsageError(f"prime mismatch: {self.p} vs {scalar.p}")
        if scalar.is_exact_zero:
            return TruncatedSeries.zero(self.p, self.x_prec, self.p_prec)
        cap = scalar.precision + max(0, scalar.valuation)
        return self * TruncatedSeries.constant(scalar, self.x_prec, cap)

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse; needs a unit numerator constant term."""
        p, n = self.p, self.p_prec
        if n == 0 or self.coeffs[0] % p == 0:
            raise DomainError("series inverse needs a p-adic unit constant numerator")
        modulus = p**n
        c = self.coeffs
        b0 = pow(c[0], -1, modulus)
        b = [b0]
        for k in range(1, self.x_prec + 1):
            acc = sum(c[j] * b[k - j] for j in range(1, k + 1))
            b.append(-b0 * acc % modulus)
        lift = p**self.denom_exp
        return TruncatedSeries.build(p, [x * lift for x in b], self.x_prec, n + self.denom_exp, 0)

    def compose(self, u: TruncatedSeries) -> TruncatedSeries:
        """``self(u(X))`` for an integral ``u`` with zero constant term."""
        self._check(u)
        if not u.is_integral or u.coeffs[0] != 0:
            raise DomainError("composition needs an integral inner series with zero constant term")
        d = min(self.x_prec, u.x_prec)
        n = self.p_prec
        inner = u.truncate(d)
        acc = TruncatedSeries.build(self.p, [self.coeffs[d]], d, n)
        for i in range(d - 1, -1, -1):
            acc = acc * inner + TruncatedSeries.build(self.p, [self.coeffs[i]], d, n)
        return acc.shift(-self.denom_exp)

    def __pow__(self, e: int) -> TruncatedSeries:
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries.one(self.p, self.x_prec, self.p_prec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # Comparison at tracked precision
    # ------------------------------------------------------------------

    def congruent(self, other: TruncatedSeries) -> bool:
        """Equal modulo the common tracked precision (zero tolerance)."""
        return (self - other).is_zero

    def first_difference(self, other: TruncatedSeries) -> int | None:
        """Index of the first coefficient that differs at common precision."""
        diff = self - other
        for i, c in enumerate(diff.coeffs):
            if c:
                return i
        return None

    def __str__(self) -> str:
        terms = [f"{c}*X^{i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        prefix = f"{self.p}^-{self.denom_exp}*" if self.denom_exp else ""
        return f"{prefix}({body}) + O({self.p}^{self.p_prec}, X^{self.x_prec + 1})"
