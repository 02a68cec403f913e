from fractions import Fraction

import pytest

from genus0.etaforms import EtaProduct, eta_product_series, eval_eta_product
from genus0.exactmath import divisors
from genus0.hauptmodul import (HAUPTMODUL_LEVELS, KappaNotRationalError, fricke_constant, hauptmodul_record,
                               hauptmodul_series, solve_hauptmodul_exponents, verify_hauptmodul)
from genus0.levels import psi


def test_examples():
    assert solve_hauptmodul_exponents(2).as_tuple() == (24, -24)
    assert solve_hauptmodul_exponents(6).as_tuple() == (5, -1, 1, -5)
    assert solve_hauptmodul_exponents(25).as_tuple() == (1, 0, -1)


@pytest.mark.parametrize("N,kappa", [(2, 4096), (6, 72), (13, 13), (8, 32), (25, 5)])
def test_kappa(N, kappa):
    rec = hauptmodul_record(N)
    assert rec.kappa == kappa
    assert rec.kappa_sqrt * rec.kappa_sqrt == kappa


def test_levels():
    assert HAUPTMODUL_LEVELS == (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25)


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25])
def test_solution_satisfies_conditions(N):
    r = dict(zip(divisors(N), solve_hauptmodul_exponents(N).as_tuple()))
    assert sum(r.values()) == 0
    assert sum(d * e for d, e in r.items()) == -24
    assert sum(Fraction(N, d) * e for d, e in r.items()) == 24
    rec = hauptmodul_record(N)
    assert rec.verified


@pytest.mark.parametrize("N", [2, 5, 13])
def test_fricke_product_is_kappa_numerically(N):
    # h(tau) h(-1/(N tau)) = kappa, evaluated from eta at a generic point
    rec = hauptmodul_record(N)
    tau = 0.13 + 0.9j / N ** 0.5
    h = eval_eta_product(rec.product, tau)
    hw = eval_eta_product(rec.product, -1 / (N * tau))
    assert abs(h * hw - rec.kappa) < 1e-8 * float(rec.kappa)


def test_series_normalization():
    for N in (2, 9, 25):
        s = hauptmodul_series(N)
        assert s.offset == -1 and s[-1] == 1
        assert s.abs_prec >= 2 * psi(N) + 10


def test_doubled_exponents_are_not_a_hauptmodul():
    assert verify_hauptmodul(EtaProduct(2, {1: 48, 2: -48})) is False


def test_non_square_kappa_rejected():
    with pytest.raises(KappaNotRationalError, match="kappa not rational"):
        fricke_constant(EtaProduct(2, {1: 1, 2: -1}))


@pytest.mark.parametrize("N", [1, 11, 14])
def test_invalid_levels(N):
    with pytest.raises(ValueError):
        solve_hauptmodul_exponents(N)


def test_leading_terms_of_h2():
    s = eta_product_series(EtaProduct(2, {1: 24, 2: -24}), 4)
    assert list(s.coeffs) == [1, -24, 276, -2048]
