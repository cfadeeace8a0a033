"""Dense integer matrices modulo p^N.

Matrices cross this module as plain ``list[list[int]]``; the arithmetic runs
on sympy's ``DomainMatrix`` over ZZ, reduced mod p^N after every product.
"""

from __future__ import annotations

from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from padic.errors import UsageError, ValidationError

IntMatrix = list[list[int]]


def check_square(a: IntMatrix) -> int:
    g = len(a)
    if any(len(row) != g for row in a):
        raise UsageError(f"matrix is not square: row lengths {[len(r) for r in a]} for {g} rows")
    return g


def identity(g: int) -> IntMatrix:
    return [[int(i == j) for j in range(g)] for i in range(g)]


def transpose(a: IntMatrix) -> IntMatrix:
    return [list(col) for col in zip(*a)]


def to_domain(a: IntMatrix) -> DomainMatrix:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in a], (rows, cols), ZZ)


def from_domain(m: DomainMatrix, modulus: int | None = None) -> IntMatrix:
    rows = m.to_list()
    if modulus is None:
        return [[int(x) for x in row] for row in rows]
    return [[int(x) % modulus for x in row] for row in rows]


def mat_mul_mod(a: IntMatrix, b: IntMatrix, modulus: int) -> IntMatrix:
    if not a or not b:
        return [[] for _ in a]
    return from_domain(to_domain(a).matmul(to_domain(b)), modulus)


def mat_pow_mod(a: IntMatrix, e: int, modulus: int) -> IntMatrix:
    g = check_square(a)
    result = to_domain(identity(g))
    base = to_domain([[x % modulus for x in row] for row in a])
    while e:
        if e & 1:
            result = to_domain(from_domain(result.matmul(base), modulus))
        base = to_domain(from_domain(base.matmul(base), modulus))
        e >>= 1
    return from_domain(result, modulus)


def det_bareiss(a: IntMatrix) -> int:
    """Exact determinant over Z (fraction-free elimination in ZZ)."""
    g = check_square(a)
    if g == 0:
        return 1
    return int(to_domain(a).det())


def inverse_mod(a: IntMatrix, p: int, prec: int) -> IntMatrix:
    """Inverse over Z/p^prec; raises ValidationError if det(a) is not a unit."""
    g = check_square(a)
    if g == 0:
        return []
    modulus = p**prec
    if det_bareiss(a) % p == 0:
        raise ValidationError("determinant is not a p-adic unit; matrix is not in GL_g(Z_p)")
    try:
        inv = Matrix(a).inv_mod(modulus)
    except ValueError as exc:
        raise ValidationError(f"matrix is not invertible mod {p}^{prec}: {exc}") from exc
    return [[int(inv[i, j]) % modulus for j in range(g)] for i in range(g)]
