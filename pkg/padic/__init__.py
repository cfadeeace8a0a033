from padic.errors import (
    DomainError,
    InvariantError,
    IwacalcError,
    PrecisionError,
    SchemaError,
    TorsionError,
    UsageError,
    ValidationError,
)
from padic.scalar import EXACT_ZERO, PadicScalar, padic_log, vp
from padic.series import TruncatedSeries, kronecker_multiply
from padic.special import cyclotomic_shifted, ell_zero, log_over_px, partial_log_product

__all__ = [
    "DomainError",
    "EXACT_ZERO",
    "InvariantError",
    "IwacalcError",
    "PadicScalar",
    "PrecisionError",
    "SchemaError",
    "TorsionError",
    "TruncatedSeries",
    "UsageError",
    "ValidationError",
    "cyclotomic_shifted",
    "ell_zero",
    "kronecker_multiply",
    "log_over_px",
    "padic_log",
    "partial_log_product",
    "vp",
]
