"""
IWACALC_* environment loader.

Reads every ``IWACALC_*`` variable once and caches it in-process.

Usage:
    from config.environment import env

    seed = env.get_int("IWACALC_SEED", 20240601)
    level = env.get("IWACALC_LOG_LEVEL", "INFO")
"""

import logging
import os

logger = logging.getLogger(__name__)

_PREFIX = "IWACALC_"


class EnvironmentStore:
    """Thin cache around the process environment."""

    def __init__(self) -> None:
        self._cache: dict[str, str] = {}
        self._loaded = False

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------

    def load(self) -> None:
        """Snapshot all IWACALC_* variables."""
        if self._loaded:
            return
        for name, value in os.environ.items():
            if name.startswith(_PREFIX):
                self._cache[name] = value
                logger.debug(f"[env] Found {name}={value!r}")
        self._loaded = True

    def reload(self) -> None:
        """Drop the snapshot; the next access reads the environment again."""
        self._cache.clear()
        self._loaded = False

    def get(self, name: str, default: str = "") -> str:
        self.load()
        return self._cache.get(name, default)

    def get_int(self, name: str, default: int | None) -> int | None:
        """Integer value, or ``default`` with a warning when unparsable."""
        raw = self.get(name)
        if not raw:
            return default
        try:
            return int(raw)
        except ValueError:
            logger.warning(f"[env] {name}={raw!r} is not an integer; using default {default}")
            return default


# Module-level singleton, import as `from config.environment import env`
env = EnvironmentStore()
