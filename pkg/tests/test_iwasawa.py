import dataclasses

import pytest
import sympy

from iwasawa import comparator
from iwasawa.comparator import functional_equation_compare
from iwasawa.element import IwasawaElement, idempotent, sigma_minus_one
from iwasawa.euler import control_ledger, euler_characteristic_exponent
from iwasawa.involution import dual_twist, involution_iota, iota_substitution
from iwasawa.presentation import ModulePresentation, char_poly
from iwasawa.weierstrass import weierstrass
from padic.errors import PrecisionError, TorsionError, UsageError, ValidationError
from padic.series import TruncatedSeries

X = sympy.Symbol("X")


def series(p: int, coeffs: list[int], D: int, N: int) -> TruncatedSeries:
    return TruncatedSeries.build(p, coeffs, D, N)


def poly_coeffs(expr) -> list[int]:
    return [int(c) for c in reversed(sympy.Poly(sympy.expand(expr), X).all_coeffs())]


class TestElements:
    def test_idempotents_are_orthogonal(self):
        p, D, N = 5, 4, 6
        es = [idempotent(p, eta, D, N) for eta in range(p - 1)]
        zero = IwasawaElement.zero(p, D, N)
        for i, a in enumerate(es):
            for j, b in enumerate(es):
                assert (a * b).congruent(a if i == j else zero)
        total = es[0]
        for e in es[1:]:
            total = total + e
        assert total.congruent(IwasawaElement.one(p, D, N))

    def test_component_index_wraps(self):
        p, D, N = 5, 3, 4
        f = series(p, [1, 2], D, N)
        e = IwasawaElement.from_mapping(p, {3: f}, D, N)
        assert e.component(-1) is f
        assert e.component(3) is f
        assert e.component(0).is_zero

    def test_sigma_minus_one_squares_to_identity(self, random_series):
        p, D, N = 7, 5, 6
        e = IwasawaElement.of(p, [random_series(p, D, N) for _ in range(p - 1)])
        assert sigma_minus_one(sigma_minus_one(e)).congruent(e)
        assert sigma_minus_one(e).component(1).congruent(-e.component(1))

    def test_shape_is_checked(self):
        with pytest.raises(UsageError):
            IwasawaElement.of(5, [TruncatedSeries.one(5, 2, 2)])
        with pytest.raises(UsageError):
            IwasawaElement.one(3, 2, 2) + IwasawaElement.one(5, 2, 2)

    def test_arithmetic(self, random_series):
        p, D, N = 3, 6, 8
        a = IwasawaElement.of(p, [random_series(p, D, N) for _ in range(2)])
        b = IwasawaElement.of(p, [random_series(p, D, N) for _ in range(2)])
        assert ((a + b) - b).congruent(a)
        assert (a * b).component(1).congruent(a.component(1) * b.component(1))


class TestInvolution:
    def test_substitution_series(self):
        assert iota_substitution(3, 4, 5).coeffs == tuple(c % 3**5 for c in (0, -1, 1, -1, 1))

    def test_iota_of_x(self):
        x = TruncatedSeries.variable(3, 6, 8)
        assert involution_iota(x).congruent(iota_substitution(3, 6, 8))

    def test_involution(self, random_series):
        for _ in range(20):
            f = random_series(3, 30, 10)
            assert involution_iota(involution_iota(f)).congruent(f)

    def test_ring_homomorphism(self, random_series):
        f, g = random_series(5, 12, 6), random_series(5, 12, 6)
        assert involution_iota(f * g).congruent(involution_iota(f) * involution_iota(g))
        assert involution_iota(f + g).congruent(involution_iota(f) + involution_iota(g))

    def test_on_elements_negates_characters(self):
        p, D, N = 5, 5, 6
        x = TruncatedSeries.variable(p, D, N)
        e = IwasawaElement.from_mapping(p, {1: x}, D, N)
        image = involution_iota(e)
        assert image.component(3).congruent(involution_iota(x))
        assert image.component(1).is_zero

    def test_dual_twist(self):
        f = series(3, [3, 1], 8, 8)
        assert dual_twist(f, 2).congruent(involution_iota(f * f))
        with pytest.raises(UsageError):
            dual_twist(f, -1)

    def test_rejects_other_types(self):
        with pytest.raises(UsageError):
            involution_iota(3)


class TestWeierstrass:
    def test_cubic(self):
        # (X + 3)(X^2 + 3X + 3)(2 + X)
        w = weierstrass(series(3, [18, 33, 24, 8, 1], 10, 10))
        assert (w.mu, w.lambda_) == (0, 3)
        assert w.precision == 3
        assert w.distinguished == (9, 12, 6, 1)
        assert w.unit.congruent(series(3, [2, 1], 7, 3))
        assert w.certified

    def test_mu_is_divided_out(self):
        w = weierstrass(series(3, [54, 99, 72, 24, 3], 10, 10))
        assert (w.mu, w.lambda_) == (1, 3)
        assert w.distinguished == (9, 12, 6, 1)

    def test_unit_series(self):
        f = series(5, [2, 5, 1], 6, 8)
        w = weierstrass(f)
        assert (w.mu, w.lambda_, w.distinguished) == (0, 0, (1,))
        assert w.unit.congruent(f)

    @pytest.mark.parametrize("lam", [1, 2, 3])
    def test_matches_constructed_factorization(self, rng, lam):
        p, D, N = 3, 12, 12
        for _ in range(5):
            lower = [p * rng.randrange(1, 20) for _ in range(lam)]
            unit = [rng.randrange(1, p)] + [rng.randrange(-5, 6) for _ in range(3)]
            P = sum(c * X**i for i, c in enumerate(lower)) + X**lam
            U = sum(c * X**i for i, c in enumerate(unit))
            w = weierstrass(series(p, poly_coeffs(P * U), D, N))
            assert (w.mu, w.lambda_) == (0, lam)
            assert w.certified
            modulus = p**w.precision
            assert [c % modulus for c in w.distinguished] == [c % modulus for c in lower + [1]]

    def test_invariants_survive_iota(self, rng):
        p, D, N = 3, 14, 10
        for _ in range(10):
            lam = rng.randrange(1, 4)
            lower = [p * rng.randrange(1, 10) for _ in range(lam)]
            f = series(p, poly_coeffs((sum(c * X**i for i, c in enumerate(lower)) + X**lam) * (1 + X)), D, N)
            a, b = weierstrass(f), weierstrass(involution_iota(f))
            assert (a.mu, a.lambda_) == (b.mu, b.lambda_)

    def test_zero_is_undecidable(self):
        with pytest.raises(PrecisionError):
            weierstrass(TruncatedSeries.zero(3, 5, 6))

    def test_needs_integral_input(self):
        with pytest.raises(ValidationError):
            weierstrass(series(3, [1, 1], 4, 6).shift(-1))

    def test_lambda_at_truncation(self):
        with pytest.raises(PrecisionError):
            weierstrass(series(3, [3, 3, 0, 0, 0, 1], 5, 6))


class TestPresentation:
    def test_diagonal_char_poly(self):
        p, D, N = 3, 6, 8
        x = TruncatedSeries.variable(p, D, N)
        pres = ModulePresentation.diagonal([x, series(p, [3, 1], D, N)])
        assert char_poly(pres).congruent(series(p, [0, 3, 1], D, N))
        assert pres.torsion_certificate

    def test_block_diagonal(self):
        p, D, N = 5, 6, 8
        a = ModulePresentation.diagonal([series(p, [5, 1], D, N)])
        b = ModulePresentation.of([
            [series(p, [1], D, N), series(p, [0, 1], D, N)],
            [series(p, [5], D, N), series(p, [1], D, N)],
        ])
        combined = ModulePresentation.block_diagonal([a, b])
        assert combined.size == 3
        assert char_poly(combined).congruent(char_poly(a) * char_poly(b))

    def test_matches_sympy(self, rng):
        p, D, N = 3, 8, 10
        ints = [[[rng.randrange(-9, 10) for _ in range(3)] for _ in range(3)] for _ in range(3)]
        pres = ModulePresentation.of([[series(p, c, D, N) for c in row] for row in ints])
        exact = sympy.Matrix(3, 3, lambda i, j: sum(c * X**k for k, c in enumerate(ints[i][j])))
        exact_det = sympy.expand(exact.det())
        assert exact_det != 0
        expected = sympy.Poly(exact_det, X)
        det = char_poly(pres)
        for k in range(D + 1):
            assert det.coeffs[k] % p**N == int(expected.coeff_monomial(X**k)) % p**N

    def test_zero_determinant_is_not_torsion(self):
        p, D, N = 3, 4, 6
        one = TruncatedSeries.one(p, D, N)
        pres = ModulePresentation.of([[one, one], [one, one]])
        assert not pres.torsion_certificate
        with pytest.raises(TorsionError):
            char_poly(pres)

    def test_entries_must_be_integral(self):
        with pytest.raises(ValidationError):
            ModulePresentation.diagonal([series(3, [1], 4, 6).shift(-1)])


class TestComparator:
    p, D, N = 3, 12, 10

    def test_lambda_mismatch(self):
        x = series(3, [0, 1], 10, 8)
        x2 = series(3, [0, 0, 1], 10, 8)
        report = functional_equation_compare(x, x2)
        assert not report.passed
        assert report.witness["field"] == "lambda"
        assert report.as_dict()["lambda"] == [1, 2]

    def test_unit_times_iota_passes(self):
        p, D, N = self.p, self.D, self.N
        f_x = series(p, poly_coeffs((X**2 + 3 * X + 3) * (1 + X)), D, N)
        unit = series(p, [2, 1, 0, 1], D, N)
        report = functional_equation_compare(f_x, involution_iota(f_x) * unit)
        assert report.passed
        assert report.mu == (0, 0) and report.lambda_ == (2, 2)
        assert 1 <= report.precision <= 6

    def test_perturbed_distinguished_polynomial_fails(self):
        p, D, N = self.p, self.D, self.N
        f_x = series(p, poly_coeffs((X**2 + 3 * X + 3) * (1 + X)), D, N)
        f_y = involution_iota(f_x) * series(p, [2, 1, 0, 1], D, N)
        report = functional_equation_compare(f_x, f_y + series(p, [3], D, N))
        assert not report.passed
        assert report.witness["field"] == "distinguished"

    def test_single_digit_precision(self):
        p, D = self.p, self.D
        f_x = series(p, poly_coeffs((X**2 + 3 * X + 3) * (1 + X)), D, 1)
        report = functional_equation_compare(f_x, involution_iota(f_x) * series(p, [2, 1], D, 1))
        assert report.passed
        assert report.precision == 1

    def test_uncertified_preparation_is_refused(self, monkeypatch):
        real = comparator.weierstrass

        def uncertified(f):
            return dataclasses.replace(real(f), certified=False)

        monkeypatch.setattr(comparator, "weierstrass", uncertified)
        f_x = series(self.p, [3, 1], self.D, self.N)
        with pytest.raises(PrecisionError):
            functional_equation_compare(f_x, involution_iota(f_x))


class TestEuler:
    def test_examples(self):
        assert euler_characteristic_exponent(1, 1, 1, 0, 2, 1, p=3) == (-1, 2)
        assert euler_characteristic_exponent(2, 3, 2, 1, 4, 2, p=3) == (-72, 144)

    @pytest.mark.parametrize(
        "args, p",
        [
            ((-1, 1, 1, 0, 2, 1), 3),
            ((1, 1, 1, 0, 2, 3), 3),
            ((1, 1, 1, 0, 2, 1), 4),
            ((1, 1, 1, 1, 2, 1), 9),
            ((1, 1, 1, 1, 2, 1), 15),
            ((1, 1, 1, 2, 2, 1), None),
        ],
    )
    def test_invalid(self, args, p):
        with pytest.raises(UsageError):
            euler_characteristic_exponent(*args, p=p)

    def test_prime_not_needed_at_base_layer(self):
        assert euler_characteristic_exponent(1, 1, 1, 0, 2, 1) == (-1, 2)
        assert euler_characteristic_exponent(0, 5, 5, 0, 3, 1) == (0, 0)
        assert control_ledger(1, 1, 1, 0, 2, 1).as_dict()["p"] is None

    def test_ledger_balances(self):
        ledger = control_ledger(2, 1, 3, 2, 4, 2, p=5)
        assert (ledger.global_exp, ledger.local_exp) == (-300, 600)
        assert ledger.balanced
        assert ledger.condition_exp == 2 * 25 * 3 * 2
        assert ledger.as_dict()["g_plus"] == 2
        assert not control_ledger(1, 1, 1, 0, 3, 1, p=3).balanced
