"""Identity checks on the logarithmic matrices and the convergence report.

A failed check is a report with ``passed=False`` and a witness, never an
exception. Exceptions are reserved for bad input and exhausted precision.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Sequence

from logmatrix.frobenius import FrobeniusData, Side, oriented
from logmatrix.products import logarithmic_matrices, logarithmic_matrix, working_precision
from logmatrix.series_matrix import SeriesMatrix
from padic.errors import PrecisionError, UsageError
from padic.series import TruncatedSeries
from padic.special import cyclotomic_shifted, partial_log_product

logger = logging.getLogger(__name__)


@dataclass
class CheckReport:
    check: str
    passed: bool
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out: dict = {"check": self.check, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out


@dataclass(frozen=True)
class ConvergenceStep:
    """Agreement of M_{n+1} and M_n up to X^D.

    ``saturated`` marks a value that is only the precision floor (the
    difference vanished at the tracked precision). ``deficit`` is set, and
    ``agreement_valuation`` is None, when N could not hold M_{n+1}.
    """
    n: int
    agreement_valuation: int | None
    saturated: bool = False
    deficit: int | None = None

    def as_dict(self) -> dict:
        out = {"n": self.n, "agreement_valuation": self.agreement_valuation, "saturated": self.saturated}
        if self.deficit is not None:
            out["deficit"] = self.deficit
        return out


def _series_witness(left: TruncatedSeries, right: TruncatedSeries) -> dict | None:
    k = left.first_difference(right)
    if k is None:
        return None
    return {"coefficient": k, "left": str(left.coefficient(k)), "right": str(right.coefficient(k))}


def cyclotomic_product(p: int, n: int, x_prec: int, p_prec: int) -> TruncatedSeries:
    """prod_{k=1}^n Phi_{p^k}(1+X), integral."""
    acc = cyclotomic_shifted(p, 1, x_prec, p_prec)
    for k in range(2, n + 1):
        acc = acc * cyclotomic_shifted(p, k, x_prec, p_prec)
    return acc


# ---------------------------------------------------------------------------
# Convergence
# ---------------------------------------------------------------------------

def _agreement(prev: SeriesMatrix, current: SeriesMatrix) -> ConvergenceStep:
    diff = current - prev
    pairs = [f.valuation() for row in diff.entries for f in row]
    low = min(v for v, _ in pairs)
    saturated = all(sat for v, sat in pairs if v == low)
    return ConvergenceStep(n=prev.level, agreement_valuation=low, saturated=saturated)


def convergence_run(
    fd: FrobeniusData,
    n_max: int,
    x_prec: int | None = None,
    p_prec: int | None = None,
) -> list[ConvergenceStep]:
    """Minimal valuation of M_{n+1} - M_n for n = 1 .. n_max - 1.

    Levels N cannot hold are reported per step with their deficit.
    """
    if n_max < 2:
        raise UsageError(f"convergence needs n_max >= 2, got {n_max}")
    if fd.g == 0:
        return []
    N = working_precision(fd, p_prec if p_prec is not None else fd.prec)
    steps: list[ConvergenceStep] = []
    prev: SeriesMatrix | None = None
    try:
        for m in logarithmic_matrices(fd, n_max, Side.PRIMAL, x_prec, N):
            if prev is not None:
                steps.append(_agreement(prev, m))
            prev = m
    except PrecisionError as exc:
        failed = prev.level + 1 if prev is not None else 1
        logger.warning(f"[convergence] stopped at M_{failed}: {exc}")
        for n in range(max(1, failed - 1), n_max):
            steps.append(ConvergenceStep(n=n, agreement_valuation=None, deficit=n + 3 - N))
    for step in steps:
        logger.info(f"[convergence] n={step.n} agreement={step.agreement_valuation} saturated={step.saturated}")
    return steps


# ---------------------------------------------------------------------------
# Orthogonality and determinants
# ---------------------------------------------------------------------------

def guard_digits(check: str, g: int, n: int) -> int:
    """Extra p-adic digits an identity check needs so its result keeps N - (n+1) digits."""
    if check == "orthogonality":
        return n + 1
    if check == "determinant":
        return max(g - 1, 0) * (n + 1)
    if check == "determinant-product":
        return max(2 * g - 1, 0) * (n + 1)
    raise UsageError(f"unknown check {check!r}")


def _internal_precision(fd: FrobeniusData, p_prec: int, check: str, n: int) -> int:
    N = working_precision(fd, p_prec)
    return min(fd.prec, N + guard_digits(check, fd.g, n))


def orthogonality_report(m: SeriesMatrix, m_dual: SeriesMatrix, n: int, p_prec: int) -> CheckReport:
    """Compare M_n^t M*_n with p^-(n+1) prod Phi_{p^k}(1+X) I_g, zero tolerance."""
    details = {"p": m.p, "n": n, "g": m.g, "D": m.x_prec, "N": p_prec}
    if m.g == 0:
        return CheckReport("orthogonality", True, details=details)
    lhs = m.transpose() @ m_dual
    rhs = SeriesMatrix.scalar_diagonal(partial_log_product(m.p, n, lhs.x_prec, p_prec), m.g)
    witness = lhs.first_difference(rhs)
    if witness is not None:
        logger.warning(f"[verify] orthogonality failed at n={n}: entry ({witness.row}, {witness.col})")
        return CheckReport("orthogonality", False, witness.as_dict(), details)
    return CheckReport("orthogonality", True, details=details)


def verify_orthogonality(fd: FrobeniusData, n: int, x_prec: int, p_prec: int) -> CheckReport:
    N = _internal_precision(fd, p_prec, "orthogonality", n)
    m = logarithmic_matrix(fd, n, Side.PRIMAL, x_prec, N)
    m_dual = logarithmic_matrix(fd, n, Side.DUAL, x_prec, N)
    return orthogonality_report(m, m_dual, n, N)


def determinant_identity_check(fd: FrobeniusData, n: int, x_prec: int, p_prec: int) -> CheckReport:
    """det M_n = det(C) p^-g_+ (prod Phi / p^n)^g_+."""
    primal = oriented(fd, Side.PRIMAL)
    N = _internal_precision(primal, p_prec, "determinant", n)
    g_plus = len(primal.scaled_block)
    details = {"p": fd.p, "n": n, "g": fd.g, "g_plus": g_plus, "D": x_prec, "N": N}
    if fd.g == 0:
        return CheckReport("determinant", True, details=details)
    lhs = logarithmic_matrix(primal, n, Side.PRIMAL, x_prec, N).det()
    det_c = primal.determinant().residue(N)
    rhs = (cyclotomic_product(fd.p, n, x_prec, N) ** g_plus).scale_int(det_c).shift(-g_plus * (n + 1))
    witness = _series_witness(lhs, rhs)
    return CheckReport("determinant", witness is None, witness, details)


def determinant_product_check(fd: FrobeniusData, n: int, x_prec: int, p_prec: int) -> CheckReport:
    """det M_n * det M*_n = (prod Phi / p^(n+1))^g."""
    N = _internal_precision(fd, p_prec, "determinant-product", n)
    g = fd.g
    details = {"p": fd.p, "n": n, "g": g, "D": x_prec, "N": N}
    if g == 0:
        return CheckReport("determinant-product", True, details=details)
    lhs = (
        logarithmic_matrix(fd, n, Side.PRIMAL, x_prec, N).det()
        * logarithmic_matrix(fd, n, Side.DUAL, x_prec, N).det()
    )
    rhs = (cyclotomic_product(fd.p, n, x_prec, N) ** g).shift(-g * (n + 1))
    witness = _series_witness(lhs, rhs)
    return CheckReport("determinant-product", witness is None, witness, details)


# ---------------------------------------------------------------------------
# Signed conditions
# ---------------------------------------------------------------------------

def signed_index_sets(g: int, g_plus: int) -> list[tuple[int, ...]]:
    """All I in {1..g} with #I = g_plus, lexicographic."""
    if not 0 <= g_plus <= g:
        raise UsageError(f"need 0 <= g_plus <= g, got g_plus={g_plus}, g={g}")
    return list(itertools.combinations(range(1, g + 1), g_plus))


def _dot(a: Sequence[TruncatedSeries], b: Sequence[TruncatedSeries], keep: Sequence[int]) -> TruncatedSeries:
    acc = a[keep[0]] * b[keep[0]]
    for k in keep[1:]:
        acc = acc + a[k] * b[k]
    return acc


def signed_pairing_check(
    fd: FrobeniusData,
    n: int,
    u: Sequence[TruncatedSeries],
    v: Sequence[TruncatedSeries],
    index_set: Sequence[int],
    x_prec: int,
    p_prec: int,
) -> CheckReport:
    """(M_n u) . (M*_n v) against the signed local conditions attached to I.

    Always checks the full pairing against R u.v with R = prod Phi / p^(n+1).
    When u vanishes on I the pairing must reduce to the sum over I^c, which
    is zero once v vanishes on I^c as well.
    """
    g = fd.g
    if len(u) != g or len(v) != g:
        raise UsageError(f"vectors of length {len(u)}, {len(v)} for g={g}")
    chosen = sorted(set(index_set))
    if any(not 1 <= k <= g for k in chosen):
        raise UsageError(f"index set {tuple(index_set)} is not inside 1..{g}")
    complement = [k - 1 for k in range(1, g + 1) if k not in chosen]
    inside = [k - 1 for k in chosen]
    details: dict = {"p": fd.p, "n": n, "g": g, "index_set": chosen}
    if g == 0:
        return CheckReport("signed-pairing", True, details=details)

    N = _internal_precision(fd, p_prec, "orthogonality", n)
    left = logarithmic_matrix(fd, n, Side.PRIMAL, x_prec, N).apply(u)
    right = logarithmic_matrix(fd, n, Side.DUAL, x_prec, N).apply(v)
    pairing = _dot(left, right, list(range(g)))
    ratio = partial_log_product(fd.p, n, x_prec, N)

    witness = _series_witness(pairing, ratio * _dot(u, v, list(range(g))))
    u_in_kernel = all(u[k].is_zero for k in inside)
    v_in_dual = all(v[k].is_zero for k in complement)
    details.update({"u_vanishes_on_I": u_in_kernel, "v_vanishes_on_complement": v_in_dual})

    if witness is None and u_in_kernel:
        restricted = ratio * _dot(u, v, complement) if complement else TruncatedSeries.zero(
            fd.p, pairing.x_prec, pairing.p_prec
        )
        witness = _series_witness(pairing, restricted)
    return CheckReport("signed-pairing", witness is None, witness, details)
