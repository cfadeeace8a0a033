"""
Command registry: the single source of truth for CLI subcommands.

main.py builds its argparse subparsers from this table, and the job config
reads the precision minima here when it validates overrides.
"""

from dataclasses import dataclass
from enum import Enum


class Command(str, Enum):
    """Canonical subcommand names."""
    LOGMATRIX = "logmatrix"
    VERIFY = "verify"
    CONVERGENCE = "convergence"
    WEIERSTRASS = "weierstrass"
    COMPARE = "compare"
    EULER = "euler"
    FIXTURES = "fixtures"


class Identity(str, Enum):
    """Identities ``verify`` can check."""
    ORTHOGONALITY = "orthogonality"
    DETERMINANT = "determinant"
    DETERMINANT_PRODUCT = "determinant-product"


@dataclass(frozen=True)
class CommandEntry:
    """Metadata for a single subcommand."""
    name: str
    description: str
    needs_frobenius: bool = False
    can_fail_check: bool = False    # exit 1 is possible
    needs_level: bool = False       # N > n + 1 applies


COMMAND_REGISTRY: dict[Command, CommandEntry] = {
    Command.LOGMATRIX: CommandEntry(
        name="Logarithmic matrix",
        description="Build M_n (or M*_n with --side dual) for the given Frobenius data.",
        needs_frobenius=True,
        needs_level=True,
    ),
    Command.VERIFY: CommandEntry(
        name="Verify identity",
        description=(
            "Check M_n^t M*_n = p^-(n+1) prod Phi_{p^k}(1+X) I, the determinant closed form, "
            "or the determinant product at level n."
        ),
        needs_frobenius=True,
        can_fail_check=True,
        needs_level=True,
    ),
    Command.CONVERGENCE: CommandEntry(
        name="Convergence",
        description="Minimal valuation of M_{n+1} - M_n for n = 1 .. n_max - 1.",
        needs_frobenius=True,
    ),
    Command.WEIERSTRASS: CommandEntry(
        name="Weierstrass preparation",
        description="mu, lambda, distinguished polynomial and unit of a series.",
    ),
    Command.COMPARE: CommandEntry(
        name="Functional equation",
        description="Compare f_X with iota(f_Y) at the characteristic-ideal level.",
        can_fail_check=True,
    ),
    Command.EULER: CommandEntry(
        name="Euler characteristic",
        description="Global and local exponents plus the signed-condition ledger.",
    ),
    Command.FIXTURES: CommandEntry(
        name="Fixtures",
        description="List bundled fixtures.",
    ),
}
