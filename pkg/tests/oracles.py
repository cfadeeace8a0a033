"""Independent reference computations over Q with exact fractions.

Nothing here touches the library's series arithmetic: cyclotomic polynomials
come from sympy and products are schoolbook convolutions on Fraction lists.
"""

from fractions import Fraction

import sympy

from padic.series import TruncatedSeries

Poly = list[Fraction]
PolyMatrix = list[list[Poly]]

_x = sympy.Symbol("x")


def shifted_cyclotomic(p: int, k: int, x_prec: int) -> Poly:
    """Coefficients of Phi_{p^k}(1 + X) up to X^x_prec."""
    poly = sympy.Poly(sympy.cyclotomic_poly(p**k, _x), _x).shift(1)
    coeffs = [Fraction(int(c)) for c in reversed(poly.all_coeffs())]
    return (coeffs + [Fraction(0)] * (x_prec + 1))[: x_prec + 1]


def constant(c: Fraction | int, x_prec: int) -> Poly:
    return [Fraction(c)] + [Fraction(0)] * x_prec


def poly_mul(a: Poly, b: Poly, x_prec: int) -> Poly:
    out = [Fraction(0)] * (x_prec + 1)
    for i, x in enumerate(a[: x_prec + 1]):
        if x:
            for j, y in enumerate(b[: x_prec + 1 - i]):
                out[i + j] += x * y
    return out


def poly_sub(a: Poly, b: Poly) -> Poly:
    return [x - y for x, y in zip(a, b)]


def mat_mul(a: PolyMatrix, b: PolyMatrix, x_prec: int) -> PolyMatrix:
    g = len(a)
    out = []
    for i in range(g):
        row = []
        for j in range(g):
            acc = [Fraction(0)] * (x_prec + 1)
            for k in range(g):
                term = poly_mul(a[i][k], b[k][j], x_prec)
                acc = [s + t for s, t in zip(acc, term)]
            row.append(acc)
        out.append(row)
    return out


def logarithmic_matrix_oracle(C: list[list[int]], g_minus: int, p: int, n: int, x_prec: int) -> PolyMatrix:
    """(C diag(1, 1/p))^(n+1) C_n ... C_1 with C_k = diag(1, Phi_{p^k}(1+X)) C^-1."""
    g = len(C)
    inv = sympy.Matrix(C).inv()
    c_inv = [[Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(g)] for i in range(g)]
    c_phi = [
        [constant(Fraction(C[i][j]) / (p if j >= g_minus else 1), x_prec) for j in range(g)]
        for i in range(g)
    ]
    result = [[constant(int(i == j), x_prec) for j in range(g)] for i in range(g)]
    for _ in range(n + 1):
        result = mat_mul(result, c_phi, x_prec)
    chain = [[constant(int(i == j), x_prec) for j in range(g)] for i in range(g)]
    for k in range(1, n + 1):
        phi = shifted_cyclotomic(p, k, x_prec)
        factor = [
            [poly_mul(phi, constant(c_inv[i][j], x_prec), x_prec) if i >= g_minus else constant(c_inv[i][j], x_prec)
             for j in range(g)]
            for i in range(g)
        ]
        chain = mat_mul(factor, chain, x_prec)
    return mat_mul(result, chain, x_prec)


def fraction_valuation(q: Fraction, p: int) -> int | None:
    if q == 0:
        return None
    v, num, den = 0, q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def min_valuation(polys: list[Poly], p: int) -> int | None:
    vals = [fraction_valuation(c, p) for f in polys for c in f]
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


def matches(f: TruncatedSeries, coeffs: Poly) -> bool:
    """``f`` agrees with the exact coefficients at f's tracked precision."""
    expected = TruncatedSeries.from_fractions(f.p, coeffs, f.x_prec, f.absolute_precision)
    return f.congruent(expected)
