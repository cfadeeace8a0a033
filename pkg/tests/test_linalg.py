import pytest
import sympy

from padic.errors import UsageError, ValidationError
from padic.linalg import (
    check_square,
    det_bareiss,
    from_domain,
    identity,
    inverse_mod,
    mat_mul_mod,
    mat_pow_mod,
    to_domain,
)


@pytest.mark.parametrize("g", [1, 2, 3, 5])
def test_bareiss_matches_sympy(rng, g):
    for _ in range(10):
        a = [[rng.randrange(-50, 50) for _ in range(g)] for _ in range(g)]
        assert det_bareiss(a) == int(sympy.Matrix(a).det())


def test_bareiss_pivot_swap():
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[0, 0], [1, 0]]) == 0
    assert det_bareiss([]) == 1


@pytest.mark.parametrize("p", [3, 5])
def test_inverse_mod(rng, p):
    prec = 9
    modulus = p**prec
    for _ in range(10):
        a = [[rng.randrange(modulus) for _ in range(4)] for _ in range(4)]
        if det_bareiss(a) % p == 0:
            continue
        assert mat_mul_mod(a, inverse_mod(a, p, prec), modulus) == identity(4)


def test_inverse_rejects_non_unit_determinant():
    with pytest.raises(ValidationError):
        inverse_mod([[3, 0], [0, 1]], 3, 5)


def test_check_square():
    with pytest.raises(UsageError):
        check_square([[1, 2], [3]])


def test_mat_pow_mod():
    a = [[1, 1], [0, 1]]
    assert mat_pow_mod(a, 5, 7) == [[1, 5], [0, 1]]
    assert mat_pow_mod(a, 0, 7) == identity(2)


def test_domain_conversion_keeps_big_integers():
    big = 3**80 + 7
    a = [[big, 1], [2, big]]
    assert from_domain(to_domain(a)) == a
    assert det_bareiss(a) == big * big - 2


def test_inverse_mod_at_high_precision():
    p, prec = 5, 40
    a = [[2, 5**30 + 1], [7, 4]]
    inv = inverse_mod(a, p, prec)
    assert mat_mul_mod(a, inv, p**prec) == identity(2)
