import random

import pytest

from logmatrix.frobenius import (
    FrobeniusData,
    Side,
    build_frobenius,
    build_frobenius_from_ap,
    dual_frobenius,
    frobenius_matrix,
    oriented,
    random_frobenius,
)
from padic.errors import UsageError, ValidationError
from padic.linalg import identity, mat_mul_mod, transpose
from padic.scalar import PadicScalar


class TestBuild:
    def test_from_ap_zero(self):
        fd = build_frobenius_from_ap(0, 3, 10)
        assert fd.C == ((0, 3**10 - 1), (1, 0))
        assert (fd.g, fd.g_minus, fd.g_plus) == (2, 1, 1)
        assert list(fd.scaled_block) == [1]
        assert fd.determinant().is_unit

    def test_from_ap_divisible_by_p(self):
        assert build_frobenius_from_ap(6, 3, 8).C[0][0] == 6

    def test_unit_ap_violates_slope_hypothesis(self):
        with pytest.raises(ValidationError, match="slope"):
            build_frobenius_from_ap(1, 3, 8)

    def test_non_square(self):
        with pytest.raises(UsageError):
            build_frobenius([[1, 0], [0]], 1, 1, 3, 8)

    def test_block_sizes_must_add_up(self):
        with pytest.raises(UsageError):
            build_frobenius([[1, 0], [0, 1]], 1, 2, 3, 8)

    def test_non_unit_determinant(self):
        with pytest.raises(ValidationError):
            build_frobenius([[3, 0], [0, 1]], 1, 1, 3, 8)

    @pytest.mark.parametrize("p", [9, 15])
    def test_composite_prime(self, p):
        with pytest.raises(UsageError, match="odd prime"):
            build_frobenius([[0, -1], [1, 0]], 1, 1, p, 8)

    def test_rejects_non_integer_entries(self):
        with pytest.raises(UsageError):
            build_frobenius([[True, 0], [0, 1]], 1, 1, 3, 8)
        with pytest.raises(UsageError):
            build_frobenius([[1.0, 0], [0, 1]], 1, 1, 3, 8)

    def test_scalar_entries_cap_precision(self):
        one = PadicScalar.from_int(3, 1, 5)
        zero = PadicScalar.exact_zero(3)
        fd = build_frobenius([[one, zero], [zero, one]], 1, 1, 3, 10)
        assert fd.prec == 5
        assert fd.C == ((1, 0), (0, 1))

    def test_non_integral_scalar_entry(self):
        third = PadicScalar.from_int(3, 1, 5).shift(-1)
        with pytest.raises(ValidationError):
            build_frobenius([[third, 0], [0, 1]], 1, 1, 3, 10)

    def test_empty(self):
        fd = build_frobenius([], 0, 0, 5, 6)
        assert fd.g == 0


class TestDual:
    def test_dual_is_inverse_transpose(self):
        fd = build_frobenius([[2, 1, 0], [1, 1, 3], [0, 3, 1]], 1, 2, 5, 8)
        dual = dual_frobenius(fd)
        assert dual.side is Side.DUAL
        assert mat_mul_mod(transpose([list(r) for r in fd.C]), [list(r) for r in dual.C], 5**8) == identity(3)

    def test_dual_is_an_involution(self):
        fd = build_frobenius_from_ap(3, 3, 9)
        assert dual_frobenius(dual_frobenius(fd)) == fd

    def test_scaled_block_moves(self):
        fd = build_frobenius([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1, 2, 3, 6)
        assert list(fd.scaled_block) == [1, 2]
        assert list(dual_frobenius(fd).scaled_block) == [0]

    def test_oriented(self):
        fd = build_frobenius_from_ap(0, 3, 6)
        assert oriented(fd, Side.PRIMAL) is fd
        assert oriented(fd, "dual").side is Side.DUAL


class TestFrobeniusMatrix:
    def test_scaled_columns_carry_one_over_p(self):
        m = frobenius_matrix(build_frobenius_from_ap(0, 3, 10))
        assert m[0][1].valuation == -1
        assert m[1][0].valuation == 0
        assert m[0][0].is_zero and m[1][1].is_zero

    def test_dual_scales_first_block(self):
        m = frobenius_matrix(dual_frobenius(build_frobenius_from_ap(0, 3, 10)))
        assert m[1][0].valuation == -1
        assert m[0][1].valuation == 0


class TestRandom:
    def test_unit_determinant(self):
        fd = random_frobenius(3, 2, 2, random.Random(1), 10)
        assert isinstance(fd, FrobeniusData)
        assert fd.determinant().is_unit

    def test_seeded_draws_repeat(self):
        a = random_frobenius(5, 1, 1, random.Random(7), 6)
        b = random_frobenius(5, 1, 1, random.Random(7), 6)
        assert a == b
