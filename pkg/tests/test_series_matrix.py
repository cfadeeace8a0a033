import pytest
import sympy

from logmatrix.frobenius import Side
from logmatrix.series_matrix import SeriesMatrix
from padic.errors import UsageError
from padic.series import TruncatedSeries

X = sympy.Symbol("X")


def poly_matrix(rng, g: int, p: int, D: int, N: int, degree: int) -> tuple[SeriesMatrix, sympy.Matrix]:
    ints = [[[rng.randrange(-20, 20) for _ in range(degree + 1)] for _ in range(g)] for _ in range(g)]
    rows = [[TruncatedSeries.build(p, c, D, N) for c in row] for row in ints]
    exact = sympy.Matrix(g, g, lambda i, j: sum(c * X**k for k, c in enumerate(ints[i][j])))
    return SeriesMatrix.of(rows, p, D), exact


class TestDeterminant:
    @pytest.mark.parametrize("g", [1, 2, 3, 4])
    def test_bird_matches_sympy_on_constants(self, rng, g):
        p, N = 5, 10
        a = [[rng.randrange(-100, 100) for _ in range(g)] for _ in range(g)]
        det = SeriesMatrix.from_int_matrix(p, a, 3, N).det()
        assert det.coeffs[0] % p**N == int(sympy.Matrix(a).det()) % p**N
        assert not any(det.coeffs[1:])

    @pytest.mark.parametrize("g", [2, 3])
    def test_bird_matches_sympy_on_polynomials(self, rng, g):
        p, D, N = 3, 8, 12
        m, exact = poly_matrix(rng, g, p, D, N, degree=2)
        det = m.det()
        expected = sympy.Poly(sympy.expand(exact.det()), X)
        for k in range(D + 1):
            assert det.coeffs[k] % p**N == int(expected.coeff_monomial(X**k)) % p**N

    def test_non_unit_constant_terms(self):
        p, D, N = 3, 4, 8
        x = TruncatedSeries.variable(p, D, N)
        three = TruncatedSeries.build(p, [3], D, N)
        m = SeriesMatrix.of([[x, three], [three, x]], p, D)
        assert m.det().congruent(TruncatedSeries.build(p, [-9, 0, 1], D, N))

    def test_empty_matrix(self):
        with pytest.raises(UsageError):
            SeriesMatrix.of([], 3, 4).det()


class TestAlgebra:
    def test_identity_is_neutral(self, rng):
        m, _ = poly_matrix(rng, 3, 5, 6, 8, degree=3)
        one = SeriesMatrix.identity(5, 3, 6, 8)
        assert (one @ m).congruent(m)
        assert (m @ one).congruent(m)

    def test_transpose_of_product(self, rng):
        a, _ = poly_matrix(rng, 2, 3, 5, 8, degree=2)
        b, _ = poly_matrix(rng, 2, 3, 5, 8, degree=2)
        assert (a @ b).transpose().congruent(b.transpose() @ a.transpose())

    def test_add_sub(self, rng):
        a, _ = poly_matrix(rng, 2, 3, 5, 8, degree=2)
        b, _ = poly_matrix(rng, 2, 3, 5, 8, degree=2)
        assert ((a + b) - b).congruent(a)

    def test_apply(self):
        p, D, N = 3, 3, 6
        one = TruncatedSeries.one(p, D, N)
        x = TruncatedSeries.variable(p, D, N)
        m = SeriesMatrix.of([[one, x], [x, one]], p, D)
        left, right = m.apply([one, one])
        assert left.congruent(one + x) and right.congruent(one + x)
        with pytest.raises(UsageError):
            m.apply([one])

    def test_shift_moves_the_shared_denominator(self):
        m = SeriesMatrix.identity(3, 2, 2, 6).shift(-2)
        assert m.denominator_exp == 2
        assert m.absolute_precision == 4

    def test_shape_checks(self):
        one = TruncatedSeries.one(3, 2, 4)
        with pytest.raises(UsageError):
            SeriesMatrix.of([[one, one], [one]], 3, 2)
        with pytest.raises(UsageError):
            SeriesMatrix.of([[TruncatedSeries.one(5, 2, 4)]], 3, 2)
        with pytest.raises(UsageError):
            SeriesMatrix.identity(3, 2, 2, 4) @ SeriesMatrix.identity(3, 3, 2, 4)


class TestComparison:
    def test_first_difference_witness(self):
        m = SeriesMatrix.identity(3, 2, 3, 6)
        changed = m.replace(1, 0, TruncatedSeries.build(3, [0, 0, 1], 3, 6))
        witness = m.first_difference(changed)
        assert (witness.row, witness.col, witness.coefficient) == (1, 0, 2)
        assert witness.as_dict()["entry"] == [1, 0]
        assert m.first_difference(m) is None

    def test_shape_predicates(self):
        p, D, N = 3, 2, 4
        one = TruncatedSeries.one(p, D, N)
        zero = TruncatedSeries.zero(p, D, N)
        anti = SeriesMatrix.of([[zero, one], [one, zero]], p, D)
        assert anti.is_antidiagonal() and not anti.is_diagonal()
        assert SeriesMatrix.identity(p, 2, D, N).is_diagonal()

    def test_provenance(self):
        m = SeriesMatrix.identity(3, 2, 2, 4).with_provenance(3, Side.DUAL)
        assert (m.level, m.side) == (3, Side.DUAL)
        assert m.transpose().level == 3
