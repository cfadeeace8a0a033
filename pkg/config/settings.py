"""Centralized configuration.

Tunables that may be overridden per run come from IWACALC_* environment
variables (see config.environment). Everything else is defined here.
"""

import logging

from config.environment import env

_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class Settings:
    # --- Fixtures ---
    FIXTURES_DIR: str = "fixtures"

    # --- Defaults for the logarithmic-matrix machine ---
    DEFAULT_SEED: int = 20240601
    DEFAULT_N_MAX: int = 6

    # --- Weierstrass preparation ---
    WEIERSTRASS_MAX_ROUNDS: int = 256

    # --- Reports ---
    JSON_INDENT: int = 2

    @property
    def SEED(self) -> int:
        return env.get_int("IWACALC_SEED", self.DEFAULT_SEED)

    @property
    def LOG_LEVEL(self) -> int:
        name = env.get("IWACALC_LOG_LEVEL", "INFO").upper()
        if name not in _LEVELS:
            logging.getLogger(__name__).warning(f"[settings] Unknown log level {name!r}; using INFO")
            name = "INFO"
        return getattr(logging, name)

    @property
    def N_MAX(self) -> int:
        value = env.get_int("IWACALC_N_MAX", self.DEFAULT_N_MAX)
        return value if value and value > 0 else self.DEFAULT_N_MAX

    @property
    def DEFAULT_P_PREC(self) -> int:
        """N: 2 (n_max + 2) unless IWACALC_P_PREC says otherwise."""
        value = env.get_int("IWACALC_P_PREC", None)
        if value is not None and value > 0:
            return value
        return 2 * (self.N_MAX + 2)

    def default_x_prec(self, p: int) -> int:
        """D: 2 p^2 unless IWACALC_X_PREC says otherwise."""
        value = env.get_int("IWACALC_X_PREC", None)
        if value is not None and value >= 0:
            return value
        return 2 * p * p


settings = Settings()
