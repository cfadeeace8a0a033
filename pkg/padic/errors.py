"""Exception hierarchy shared by every layer.

Library code raises these; only the CLI runner turns them into exit codes.
"""

from __future__ import annotations


class IwacalcError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = 2


class UsageError(IwacalcError):
    """Wrong shapes, mismatched primes, out-of-range arguments."""


class SchemaError(IwacalcError):
    """A JSON document does not match its schema."""


class ValidationError(IwacalcError):
    """Input is well-formed but mathematically invalid (e.g. non-unit determinant)."""


class DomainError(IwacalcError):
    """Operation undefined on this input (e.g. inverting zero)."""


class PrecisionError(IwacalcError):
    """Not enough p-adic or X-adic precision to decide or to represent a result."""

    exit_code = 3

    def __init__(self, message: str, *, deficit: int | None = None) -> None:
        super().__init__(message)
        self.deficit = deficit


class TorsionError(PrecisionError):
    """Presentation determinant is zero at the working precision."""


class InvariantError(IwacalcError):
    """An internal invariant was breached."""

    exit_code = 4
