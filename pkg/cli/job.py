"""JobConfig: one validated CLI invocation."""

from __future__ import annotations

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from cli.schemas import OddPrime
from command_registry import COMMAND_REGISTRY, Command, Identity
from config.settings import settings
from fixture_profile import FixtureProfile, load_fixture
from padic.errors import PrecisionError, UsageError

logger = logging.getLogger(__name__)


class JobConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: Command
    p: Optional[OddPrime] = None
    n: Optional[int] = Field(default=None, ge=1, description="Level of M_n.")
    n_max: Optional[int] = Field(default=None, ge=1)
    x_prec: Optional[int] = Field(default=None, ge=0, description="D: terms up to X^D.")
    p_prec: Optional[int] = Field(default=None, ge=1, description="N: p-adic working precision.")
    side: str = Field(default="primal", pattern="^(primal|dual)$")
    a_p: Optional[str] = Field(default=None, pattern=r"^-?[0-9]+$")
    c_matrix: Optional[str] = Field(default=None, description="Path to a Frobenius JSON document.")
    input: Optional[str] = Field(default=None, description="Path to a command input JSON document.")
    inline: Optional[str] = Field(default=None, description="Command input JSON given inline.")
    fixture: Optional[str] = None
    identity: Identity = Identity.ORTHOGONALITY
    random_g: Optional[int] = Field(default=None, ge=1)
    g_minus: Optional[int] = Field(default=None, ge=0)
    m: Optional[int] = Field(default=None, ge=0)
    e: Optional[int] = Field(default=None, ge=0)
    deg_f: Optional[int] = Field(default=None, ge=0)
    n_level: Optional[int] = Field(default=None, ge=0)
    g: Optional[int] = Field(default=None, ge=0)
    seed: int = Field(default_factory=lambda: settings.SEED)
    out: Optional[str] = None
    json_output: bool = False
    verbosity: int = 0

    # ------------------------------------------------------------------
    # Resolution against fixtures and settings
    # ------------------------------------------------------------------

    def load_fixture(self) -> FixtureProfile | None:
        if not self.fixture:
            return None
        try:
            return load_fixture(self.fixture)
        except FileNotFoundError as exc:
            raise UsageError(str(exc)) from exc

    def resolved(self) -> JobConfig:
        """Fill unset values from the fixture, then settings; validate minima."""
        fixture = self.load_fixture()
        updates: dict = {}
        if fixture is not None:
            if self.p is not None and self.p != fixture.p:
                raise UsageError(f"--p {self.p} disagrees with fixture {fixture.name} (p={fixture.p})")
            updates["p"] = fixture.p
            for key, attr in (("n", "n"), ("n_max", "n_max"), ("D", "x_prec"), ("N", "p_prec")):
                value = getattr(fixture.defaults, key)
                if getattr(self, attr) is None and value is not None:
                    updates[attr] = value
        job = self.model_copy(update=updates)

        if job.n_max is None:
            job = job.model_copy(update={"n_max": settings.N_MAX})
        if job.p_prec is None:
            job = job.model_copy(update={"p_prec": settings.DEFAULT_P_PREC})
        if job.x_prec is None and job.p is not None:
            job = job.model_copy(update={"x_prec": settings.default_x_prec(job.p)})
        if job.n is None and COMMAND_REGISTRY[job.command].needs_level:
            job = job.model_copy(update={"n": 1})
        job.validate_minima()
        return job

    def validate_minima(self) -> None:
        entry = COMMAND_REGISTRY[self.command]
        if entry.needs_frobenius and self.p is None:
            raise UsageError(f"{self.command.value} needs --p (or a fixture)")
        if entry.needs_level and self.n is not None and self.p_prec is not None and self.p_prec <= self.n + 1:
            raise PrecisionError(
                f"--p-prec {self.p_prec} must exceed n + 1 = {self.n + 1} for {self.command.value}",
                deficit=self.n + 2 - self.p_prec,
            )
        if self.command is Command.CONVERGENCE and (self.n_max or 0) < 2:
            raise UsageError("convergence needs --n-max >= 2")
        logger.debug(f"[cli] job {self.command.value}: p={self.p} n={self.n} D={self.x_prec} N={self.p_prec}")
