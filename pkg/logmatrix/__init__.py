from logmatrix.checks import (
    CheckReport,
    ConvergenceStep,
    convergence_run,
    determinant_identity_check,
    determinant_product_check,
    guard_digits,
    orthogonality_report,
    signed_index_sets,
    signed_pairing_check,
    verify_orthogonality,
)
from logmatrix.frobenius import (
    FrobeniusData,
    Side,
    build_frobenius,
    build_frobenius_from_ap,
    dual_frobenius,
    frobenius_matrix,
    random_frobenius,
)
from logmatrix.products import assemble, block_factor, chain_of, logarithmic_matrices, logarithmic_matrix
from logmatrix.series_matrix import EntryWitness, SeriesMatrix

__all__ = [
    "CheckReport",
    "ConvergenceStep",
    "EntryWitness",
    "FrobeniusData",
    "SeriesMatrix",
    "Side",
    "assemble",
    "block_factor",
    "build_frobenius",
    "build_frobenius_from_ap",
    "chain_of",
    "convergence_run",
    "determinant_identity_check",
    "determinant_product_check",
    "dual_frobenius",
    "frobenius_matrix",
    "guard_digits",
    "logarithmic_matrices",
    "logarithmic_matrix",
    "orthogonality_report",
    "random_frobenius",
    "signed_index_sets",
    "signed_pairing_check",
    "verify_orthogonality",
]
