from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from genus0.exactmath import (IntPolynomial, QuadraticNumber, RationalFunction, _bernoulli_all, bernoulli,
                              divisor_sum, divisors, legendre_symbol, mat_vec, nullspace, poly_gcd, quad_norm,
                              squarefree_decomposition)

ints = st.integers(-30, 30)


def test_nullspace_rank_one():
    assert nullspace([[1, 2], [2, 4]]) == [[2, -1]]


def test_nullspace_full_rank_is_empty():
    assert nullspace([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_nullspace_against_sympy(rows, cols, data):
    m = [[data.draw(st.integers(-4, 4)) for _ in range(cols)] for _ in range(rows)]
    basis = nullspace(m)
    for v in basis:
        assert all(x == 0 for x in mat_vec(m, v))
        first = next(x for x in v if x)
        assert first > 0
        g = 0
        for x in v:
            g = sympy.igcd(g, x)
        assert g == 1
    assert len(basis) == cols - sympy.Matrix(m).rank()


def test_legendre_examples():
    assert legendre_symbol(-1, 13) == 1
    assert legendre_symbol(-1, 11) == -1
    assert legendre_symbol(-3, 3) == 0


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                               79, 83, 89, 97])
def test_legendre_brute_force(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(-50, 51):
        want = 0 if a % p == 0 else (1 if a % p in squares else -1)
        assert legendre_symbol(a, p) == want


@pytest.mark.parametrize("p", [2, 9, 15, 1])
def test_legendre_rejects_bad_modulus(p):
    with pytest.raises(ValueError):
        legendre_symbol(1, p)


def test_bernoulli_printed_values():
    printed = {2: Fraction(1, 6), 4: Fraction(-1, 30), 6: Fraction(1, 42), 8: Fraction(-1, 30),
               10: Fraction(5, 66), 12: Fraction(-691, 2730)}
    for k, v in printed.items():
        assert bernoulli(k) == v
    assert _bernoulli_all(0) == 1 and _bernoulli_all(1) == Fraction(-1, 2)


@pytest.mark.parametrize("k", [1, 3, 0, -2])
def test_bernoulli_rejects(k):
    with pytest.raises(ValueError):
        bernoulli(k)


def test_bernoulli_matches_sympy():
    for k in range(2, 31, 2):
        assert bernoulli(k) == Fraction(str(sympy.bernoulli(k)))


def test_divisor_sum():
    assert divisor_sum(6, 1) == 12
    assert divisor_sum(1, 1) == 1
    assert divisor_sum(4, 3) == 73
    for n in range(1, 60):
        assert divisor_sum(n, 2) == sympy.divisor_sigma(n, 2)
        assert divisors(n) == sympy.divisors(n)


def test_quad_norm_examples():
    assert quad_norm(QuadraticNumber(1, 1, 5)) == -4
    assert quad_norm(QuadraticNumber(0, 1, -2)) == 2
    assert quad_norm(QuadraticNumber(3, 2, 2)) == 1


def test_radicand_reduced():
    x = QuadraticNumber(0, 1, 8)
    assert (x.b, x.d) == (2, 2)
    assert QuadraticNumber(3, 5, 4) == 13
    assert squarefree_decomposition(-72) == (6, -2)


@given(ints, ints, st.sampled_from([-7, -2, -1, 2, 3, 5, 6, 13]))
def test_norm_conjugate_invariant(a, b, d):
    x = QuadraticNumber(a, b, d)
    assert quad_norm(x) == quad_norm(x.conjugate())
    assert x * x.conjugate() == quad_norm(x)


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20),
       st.sampled_from([-5, -3, -1, 2, 3, 7, 10]))
def test_square_roots_in_field(a, b, d):
    x = QuadraticNumber(a, b, d)
    r = (x * x).sqrt()
    assert r is not None and r * r == x * x


def test_non_squares():
    assert QuadraticNumber(-1, 0, -2).sqrt() is None
    assert QuadraticNumber(-1, 0, -1).sqrt() == QuadraticNumber(0, 1, -1)
    assert QuadraticNumber(2, 0, 3).sqrt() is None
    assert QuadraticNumber(3, 0, 3).sqrt() == QuadraticNumber(0, 1, 3)


polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6)


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_poly_gcd_against_sympy(a, b, c):
    h = sympy.Symbol("h")
    pa, pb, pc = (IntPolynomial(x) for x in (a, b, c))
    if pa.is_zero() or pb.is_zero() or pc.is_zero():
        return
    g = poly_gcd(pa * pc, pb * pc)
    want = sympy.Poly(sympy.gcd(sympy.Poly(list(reversed((pa * pc).coeffs)), h),
                                sympy.Poly(list(reversed((pb * pc).coeffs)), h)), h)
    assert g.degree == want.degree()
    assert g.divides(pa * pc) and g.divides(pb * pc)


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_rational_function_canonical(a, b):
    num, den = IntPolynomial(a), IntPolynomial(b)
    if den.is_zero():
        return
    f = RationalFunction(num, den)
    assert RationalFunction(f.num, f.den) == f
    assert f.den.leading > 0
    assert poly_gcd(f.num, f.den).degree <= 0 or f.num.is_zero()
    # same function as num/den
    for x in (Fraction(1, 3), 2, -5, 7):
        if den(x) != 0:
            assert f(x) == Fraction(num(x)) / den(x)


def test_rational_function_arithmetic_and_compose():
    h = RationalFunction.identity()
    f = (h + 256) ** 3 / h**2
    assert f.num.coeffs == (16777216, 196608, 768, 1)
    assert f - 1728 == (h + 64) * (h - 512) ** 2 / h**2
    g = f.compose(RationalFunction([4096], [0, 1]))
    assert g(Fraction(1, 2)) == f(Fraction(8192))
    assert RationalFunction.from_rational_coeffs([Fraction(1, 2)], [Fraction(1, 3)]) == Fraction(3, 2)


def test_rational_function_json():
    f = RationalFunction([1, 2], [0, 1])
    assert f.to_json() == {"num": ["1", "2"], "den": ["0", "1"]}


def test_division_helpers():
    p = IntPolynomial([-512, 1]) ** 2 * IntPolynomial([64, 1])
    assert IntPolynomial([-512, 1]).divides(p)
    assert not IntPolynomial([512, 1]).divides(p)
    assert p.exact_div(IntPolynomial([64, 1])) == IntPolynomial([-512, 1]) ** 2
