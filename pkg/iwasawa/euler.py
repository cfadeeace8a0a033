"""Exponent bookkeeping for the Euler characteristics in the control argument.

For a totally real layer F_n of degree p^n over Q:

    global:  -m * p^n * e * deg(f) * g_-
    local:    m * p^n * e * deg(f) * g

The local value is reported as a positive exponent of a cardinality. The
prime only enters through the layer degree, so it may be omitted at n = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from padic.errors import UsageError
from padic.scalar import check_prime


def _layer_degree(n_level: int, p: int | None) -> int:
    if p is None:
        if n_level > 0:
            raise UsageError(f"p is required for the degree p^{n_level} of layer n_level={n_level}")
        return 1
    check_prime(p)
    return p**n_level


def _validate(m: int, e: int, deg_f: int, n_level: int, g: int, g_minus: int) -> None:
    for name, value in (("m", m), ("e", e), ("deg_f", deg_f), ("n_level", n_level), ("g", g), ("g_minus", g_minus)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise UsageError(f"{name} must be a non-negative integer, got {value!r}")
    if g_minus > g:
        raise UsageError(f"g_minus={g_minus} exceeds g={g}")


def euler_characteristic_exponent(
    m: int, e: int, deg_f: int, n_level: int, g: int, g_minus: int, *, p: int | None = None
) -> tuple[int, int]:
    """(global exponent, local exponent)."""
    _validate(m, e, deg_f, n_level, g, g_minus)
    base = m * _layer_degree(n_level, p) * e * deg_f
    return -base * g_minus, base * g


@dataclass(frozen=True)
class ControlLedger:
    m: int
    e: int
    deg_f: int
    n_level: int
    g: int
    g_minus: int
    p: int | None
    global_exp: int
    local_exp: int
    condition_exp: int   # bound for the signed local condition, m p^n e deg(f) g_+

    @property
    def g_plus(self) -> int:
        return self.g - self.g_minus

    @property
    def balanced(self) -> bool:
        return self.g_plus == self.g_minus

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "e": self.e,
            "deg_f": self.deg_f,
            "n_level": self.n_level,
            "g": self.g,
            "g_minus": self.g_minus,
            "g_plus": self.g_plus,
            "p": self.p,
            "global_exp": self.global_exp,
            "local_exp": self.local_exp,
            "condition_exp": self.condition_exp,
            "balanced": self.balanced,
        }


def control_ledger(
    m: int, e: int, deg_f: int, n_level: int, g: int, g_minus: int, *, p: int | None = None
) -> ControlLedger:
    global_exp, local_exp = euler_characteristic_exponent(m, e, deg_f, n_level, g, g_minus, p=p)
    condition_exp = m * _layer_degree(n_level, p) * e * deg_f * (g - g_minus)
    return ControlLedger(m, e, deg_f, n_level, g, g_minus, p, global_exp, local_exp, condition_exp)
