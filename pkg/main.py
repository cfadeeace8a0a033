"""
iwacalc: logarithmic matrices, Iwasawa-algebra tools and identity checks.

Entry point: parses a subcommand, runs one job, prints the report and exits
with the job's status (0 pass, 1 check failed, 2 usage/schema, 3 precision,
4 internal).

Usage:
    python main.py verify --fixture ap0_p3 --identity orthogonality
    python main.py logmatrix --ap 0 --p 3 --n 2 --json
    python main.py convergence --fixture ap0_p3 --n-max 6 --x-prec 50
    python main.py compare --fixture compare_x_x2
"""

import argparse
import logging
import sys

import pydantic

from cli import JobConfig, canonical_json, run, summarize
from command_registry import COMMAND_REGISTRY, Command, Identity
from config.settings import settings
from padic.errors import UsageError

logger = logging.getLogger("iwacalc")


def _configure_logging(verbosity: int) -> None:
    level = settings.LOG_LEVEL
    if verbosity > 0:
        level = logging.DEBUG
    elif verbosity < 0:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, help="Odd prime.")
    sub.add_argument("--x-prec", type=int, dest="x_prec", help="D: keep terms up to X^D (default 2 p^2).")
    sub.add_argument("--p-prec", type=int, dest="p_prec", help="N: p-adic working precision.")
    sub.add_argument("--fixture", help="Name of a bundled fixture (see the fixtures subcommand).")
    sub.add_argument("--out", help="Also write the canonical JSON report to this path.")
    sub.add_argument("--json", action="store_true", dest="json_output", help="Print the JSON report.")
    sub.add_argument("-v", "--verbose", action="count", default=0, dest="verbose")
    sub.add_argument("-q", "--quiet", action="store_true")


def _add_frobenius(sub: argparse.ArgumentParser) -> None:
    source = sub.add_argument_group("Frobenius data (exactly one source)")
    source.add_argument("--ap", dest="a_p", help="a_p with v_p(a_p) >= 1; uses C = [[a_p, -1], [1, 0]].")
    source.add_argument("--c-matrix", dest="c_matrix", help="Path to a Frobenius JSON document.")
    source.add_argument("--random-g", type=int, dest="random_g", help="Draw a random C in GL_g(Z_p) (IWACALC_SEED).")
    source.add_argument("--g-minus", type=int, dest="g_minus", help="g_- for --random-g (default g // 2).")


def _add_input(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", help="Path to the command's input JSON.")
    sub.add_argument("--inline", help="The command's input JSON, inline.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iwacalc", description=__doc__.strip().splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)

    for command, entry in COMMAND_REGISTRY.items():
        sub = subparsers.add_parser(command.value, help=entry.description, description=entry.description)
        _add_common(sub)
        if entry.needs_frobenius:
            _add_frobenius(sub)
        if command in (Command.LOGMATRIX, Command.VERIFY):
            sub.add_argument("--n", type=int, help="Level n of M_n (default 1 or the fixture's).")
        if command is Command.CONVERGENCE:
            sub.add_argument("--n-max", type=int, dest="n_max", help="Largest level (default IWACALC_N_MAX).")
        if command is Command.LOGMATRIX:
            sub.add_argument("--side", choices=["primal", "dual"], default="primal")
        if command is Command.VERIFY:
            sub.add_argument(
                "--identity",
                choices=[i.value for i in Identity],
                default=Identity.ORTHOGONALITY.value,
            )
        if command in (Command.WEIERSTRASS, Command.COMPARE, Command.EULER):
            _add_input(sub)
        if command is Command.EULER:
            for flag in ("--m", "--e", "--deg-f", "--n-level", "--g", "--g-minus"):
                sub.add_argument(flag, type=int, dest=flag[2:].replace("-", "_"))
    return parser


def _job_from_args(args: argparse.Namespace) -> JobConfig:
    fields = {
        key: value
        for key, value in vars(args).items()
        if key not in ("verbose", "quiet") and value is not None
    }
    fields["verbosity"] = -1 if args.quiet else args.verbose
    try:
        return JobConfig.model_validate(fields)
    except pydantic.ValidationError as exc:
        raise UsageError(f"invalid arguments: {exc}") from exc


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(-1 if args.quiet else args.verbose)

    try:
        job = _job_from_args(args)
    except UsageError as exc:
        logger.error(str(exc))
        return exc.exit_code

    result = run(job)
    sys.stdout.write(canonical_json(result.report) if job.json_output else summarize(result.report))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
