"""
Job runner: turns a JobConfig into a report and an exit status.

Exit statuses:
  0  success / check passed
  1  check failed (report carries a witness)
  2  usage, schema, validation or domain error
  3  precision exhausted or torsion not certifiable
  4  internal invariant breach
"""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from cli.codec import (
    decode_series,
    encode_frobenius,
    encode_series,
    encode_series_matrix,
    encode_weierstrass,
    frobenius_from_model,
    parse,
    series_from_model,
)
from cli.job import JobConfig
from cli.reports import write_report
from cli.schemas import CompareInput, EulerInput, FrobeniusModel, WeierstrassInput
from command_registry import Command, Identity
from fixture_profile import FixtureProfile, load_all_fixtures
from iwasawa.comparator import functional_equation_compare
from iwasawa.euler import control_ledger
from iwasawa.weierstrass import weierstrass
from logmatrix.checks import (
    convergence_run,
    determinant_identity_check,
    determinant_product_check,
    verify_orthogonality,
)
from logmatrix.frobenius import (
    FrobeniusData,
    Side,
    build_frobenius,
    build_frobenius_from_ap,
    random_frobenius,
)
from logmatrix.products import logarithmic_matrix
from padic.errors import InvariantError, IwacalcError, PrecisionError, SchemaError, UsageError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1


@dataclass
class RunResult:
    exit_code: int
    report: dict


# ------------------------------------------------------------------
# Input resolution
# ------------------------------------------------------------------

def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise UsageError(f"input file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc


def _exact_precision(job: JobConfig, g: int) -> int:
    """Integer inputs are exact; give C enough digits for every identity check."""
    level = job.n or job.n_max or 1
    return job.p_prec + 2 * g * (level + 1)


def _frobenius(job: JobConfig, fixture: FixtureProfile | None) -> FrobeniusData:
    sources = [
        name
        for name, present in (
            ("--fixture", fixture is not None),
            ("--ap", job.a_p is not None),
            ("--c-matrix", job.c_matrix is not None),
            ("--random-g", job.random_g is not None),
        )
        if present
    ]
    if len(sources) != 1:
        raise UsageError(f"give exactly one Frobenius source, got {sources or 'none'}")
    p = job.p

    if fixture is not None:
        if fixture.kind == "frobenius":
            model = parse(FrobeniusModel, fixture.payload)
            return frobenius_from_model(model, p, _exact_precision(job, len(model.C)))
        if fixture.kind == "random-frobenius":
            g_minus, g_plus = fixture.payload["g_minus"], fixture.payload["g_plus"]
            draw = random_frobenius(p, g_minus, g_plus, random.Random(fixture.seed), job.p_prec)
            return build_frobenius(draw.C, g_minus, g_plus, p, _exact_precision(job, draw.g))
        raise UsageError(f"fixture {fixture.name} is a {fixture.kind} fixture, not Frobenius data")

    if job.a_p is not None:
        return build_frobenius_from_ap(int(job.a_p), p, _exact_precision(job, 2))

    if job.c_matrix is not None:
        model = parse(FrobeniusModel, _read_json(job.c_matrix))
        return frobenius_from_model(model, p, _exact_precision(job, len(model.C)))

    g = job.random_g
    g_minus = job.g_minus if job.g_minus is not None else g // 2
    if g_minus > g:
        raise UsageError(f"--g-minus {g_minus} exceeds --random-g {g}")
    draw = random_frobenius(p, g_minus, g - g_minus, random.Random(job.seed), job.p_prec)
    logger.info(f"[cli] Drew random C in GL_{g}(Z_{p}) with seed {job.seed}")
    return build_frobenius(draw.C, g_minus, g - g_minus, p, _exact_precision(job, g))


def _command_input(job: JobConfig, fixture: FixtureProfile | None, kind: str) -> Any:
    sources = [s for s in (fixture, job.input, job.inline) if s is not None]
    if len(sources) != 1:
        raise UsageError(f"give exactly one of --fixture, --input, --inline for {job.command.value}")
    if fixture is not None:
        if fixture.kind != kind:
            raise UsageError(f"fixture {fixture.name} is a {fixture.kind} fixture, not {kind}")
        return fixture.payload
    if job.input is not None:
        return _read_json(job.input)
    try:
        return json.loads(job.inline)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"--inline is not valid JSON: {exc}") from exc


# ------------------------------------------------------------------
# Handlers: each returns (report body, passed)
# ------------------------------------------------------------------

def _precision_block(job: JobConfig) -> dict:
    return {"p": job.p, "D": job.x_prec, "N": job.p_prec}


def _run_logmatrix(job: JobConfig, fixture: FixtureProfile | None) -> tuple[dict, bool]:
    fd = _frobenius(job, fixture)
    m = logarithmic_matrix(fd, job.n, Side(job.side), job.x_prec, job.p_prec)
    return {"frobenius": encode_frobenius(fd), "matrix": encode_series_matrix(m), **_precision_block(job)}, True


_IDENTITIES: dict[Identity, Callable] = {
    Identity.ORTHOGONALITY: verify_orthogonality,
    Identity.DETERMINANT: determinant_identity_check,
    Identity.DETERMINANT_PRODUCT: determinant_product_check,
}


def _run_verify(job: JobConfig, fixture: FixtureProfile | None) -> tuple[dict, bool]:
    fd = _frobenius(job, fixture)
    check = _IDENTITIES[job.identity](fd, job.n, job.x_prec, job.p_prec)
    body = check.as_dict()
    body["frobenius"] = encode_frobenius(fd)
    body["identity"] = job.identity.value
    return body, check.passed


def _run_convergence(job: JobConfig, fixture: FixtureProfile | None) -> tuple[dict, bool]:
    fd = _frobenius(job, fixture)
    steps = convergence_run(fd, job.n_max, job.x_prec, job.p_prec)
    body = {
        "frobenius": encode_frobenius(fd),
        "n_max": job.n_max,
        "steps": [s.as_dict() for s in steps],
        **_precision_block(job),
    }
    return body, True


def _run_weierstrass(job: JobConfig, fixture: FixtureProfile | None) -> tuple[dict, bool]:
    data = _command_input(job, fixture, "weierstrass")
    if isinstance(data, dict) and "f" in data:
        f = series_from_model(parse(WeierstrassInput, data).f)
    else:
        f = decode_series(data)
    w = weierstrass(f)
    return {"input": encode_series(f), "result": encode_weierstrass(w)}, True


def _run_compare(job: JobConfig, fixture: FixtureProfile | None) -> tuple[dict, bool]:
    data = parse(CompareInput, _command_input(job, fixture, "compare"))
    report = functional_equation_compare(series_from_model(data.f_x), series_from_model(data.f_y))
    return report.as_dict(), report.passed


def _run_euler(job: JobConfig, fixture: FixtureProfile | None) -> tuple[dict, bool]:
    if job.input is not None or job.inline is not None:
        args = parse(EulerInput, _command_input(job, None, "euler"))
    else:
        flags = {
            "m": job.m,
            "e": job.e,
            "deg_f": job.deg_f,
            "n_level": job.n_level,
            "g": job.g,
            "g_minus": job.g_minus,
            "p": job.p,
        }
        missing = [k for k, v in flags.items() if v is None and k != "p"]
        if missing:
            raise UsageError(f"euler needs {', '.join('--' + k.replace('_', '-') for k in missing)}")
        args = parse(EulerInput, flags)
    ledger = control_ledger(args.m, args.e, args.deg_f, args.n_level, args.g, args.g_minus, p=args.p)
    body = {"global_exp": ledger.global_exp, "local_exp": ledger.local_exp, "ledger": ledger.as_dict()}
    return body, True


def _run_fixtures(job: JobConfig, fixture: FixtureProfile | None) -> tuple[dict, bool]:
    items = [
        {"name": f.name, "kind": f.kind, "p": f.p, "description": f.description}
        for f in load_all_fixtures().values()
    ]
    return {"fixtures": items}, True


_HANDLERS: dict[Command, Callable[[JobConfig, FixtureProfile | None], tuple[dict, bool]]] = {
    Command.LOGMATRIX: _run_logmatrix,
    Command.VERIFY: _run_verify,
    Command.CONVERGENCE: _run_convergence,
    Command.WEIERSTRASS: _run_weierstrass,
    Command.COMPARE: _run_compare,
    Command.EULER: _run_euler,
    Command.FIXTURES: _run_fixtures,
}


# ------------------------------------------------------------------
# Entry point
# ------------------------------------------------------------------

def _error_report(command: Command, exc: IwacalcError) -> dict:
    report = {
        "command": command.value,
        "error": type(exc).__name__,
        "message": str(exc),
        "exit_code": exc.exit_code,
    }
    if isinstance(exc, PrecisionError) and exc.deficit is not None:
        report["deficit"] = exc.deficit
    return report


def run(config: JobConfig) -> RunResult:
    """Execute one job; never raises for toolkit errors."""
    try:
        job = config.resolved()
        fixture = job.load_fixture() if job.command is not Command.FIXTURES else None
        body, passed = _HANDLERS[job.command](job, fixture)
        report = {"command": job.command.value, **body}
        code = EXIT_OK if passed else EXIT_CHECK_FAILED
        logger.info(f"[cli] {job.command.value} finished with exit {code}")
    except IwacalcError as exc:
        logger.error(f"[cli] {config.command.value} failed: {type(exc).__name__}: {exc}")
        report = _error_report(config.command, exc)
        code = exc.exit_code
    except Exception as exc:
        logger.exception(f"[cli] internal error in {config.command.value}")
        report = _error_report(config.command, InvariantError(f"{type(exc).__name__}: {exc}"))
        code = InvariantError.exit_code

    if config.out:
        write_report(report, config.out)
    return RunResult(exit_code=code, report=report)
