import random

import pytest

from config.environment import env
from padic.series import TruncatedSeries

SEED = 20240601


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture
def random_series(rng):
    """Factory for integral series with random numerators mod p^N."""

    def make(p: int, x_prec: int, p_prec: int, unit_constant: bool = False) -> TruncatedSeries:
        modulus = p**p_prec
        coeffs = [rng.randrange(modulus) for _ in range(x_prec + 1)]
        if unit_constant and coeffs[0] % p == 0:
            coeffs[0] += 1
        return TruncatedSeries.build(p, coeffs, x_prec, p_prec)

    return make


@pytest.fixture
def clean_env(monkeypatch):
    """Drop IWACALC_* overrides and reset the cached environment around a test."""
    for name in ("IWACALC_SEED", "IWACALC_LOG_LEVEL", "IWACALC_N_MAX", "IWACALC_P_PREC", "IWACALC_X_PREC"):
        monkeypatch.delenv(name, raising=False)
    env.reload()
    yield monkeypatch
    env.reload()
