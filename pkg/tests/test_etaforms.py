import random
from fractions import Fraction

import pytest

from genus0.etaforms import (EtaProduct, check_functional_equations, e2N_from_eta, e2N_series,
                             eisenstein_series, eta_product_series, eta_series, eval_e2N, eval_eta,
                             j_series, normalized_weight2)
from genus0.exactmath import divisor_sum

def tmul(a, b, prec):
    out = [0] * prec
    for i, x in enumerate(a[:prec]):
        if x:
            for j, y in enumerate(b[: prec - i]):
                out[i + j] += x * y
    return out


def tdiv(a, b, prec):
    # b[0] == 1
    out = []
    for k in range(prec):
        out.append(a[k] - sum(out[i] * b[k - i] for i in range(max(0, k - len(b) + 1), k)))
    return out


def naive_product(prec, d=1):
    """prod (1 - q^(d n)) truncated below q^prec, one factor at a time."""
    p = [1] + [0] * (prec - 1)
    for n in range(1, (prec - 1) // d + 1):
        f = [0] * prec
        f[0] = 1
        f[d * n] = -1
        p = tmul(p, f, prec)
    return p


def test_eta_matches_naive_product():
    s = eta_series(30)
    assert s.offset == Fraction(1, 24)
    assert list(s.coeffs) == naive_product(30)


def test_eta_product_offset_and_leading():
    p = EtaProduct(25, {1: 1, 5: 0, 25: -1})
    s = eta_product_series(p, 20)
    assert s.offset == -1 and s.leading == 1


def power(a, k, prec):
    out = [1] + [0] * (prec - 1)
    for _ in range(k):
        out = tmul(out, a, prec)
    return out


def test_h2_against_direct_expansion():
    # (eta(tau)/eta(2tau))^24 = q^-1 prod (1-q^n)^24/(1-q^2n)^24
    prec = 12
    num = power(naive_product(prec), 24, prec)
    den = power(naive_product(prec, 2), 24, prec)
    want = tdiv(num, den, prec)
    s = eta_product_series(EtaProduct(2, {1: 24, 2: -24}), prec)
    assert s.offset == -1 and list(s.coeffs) == want


def test_eisenstein_coefficients():
    e4, e6 = eisenstein_series(4, 10), eisenstein_series(6, 10)
    assert list(e4.coeffs) == [1] + [240 * divisor_sum(n, 3) for n in range(1, 10)]
    assert list(e6.coeffs) == [1] + [-504 * divisor_sum(n, 5) for n in range(1, 10)]


def test_j_from_eisenstein_matches_eta_route():
    # independent route: j = E4^3 / Delta with Delta = q prod (1-q^n)^24
    prec = 10
    e4 = [1] + [240 * divisor_sum(n, 3) for n in range(1, prec)]
    want = tdiv(power(e4, 3, prec), power(naive_product(prec), 24, prec), prec)
    js = j_series(prec)
    assert js.offset == -1 and list(js.coeffs) == want
    assert want[:3] == [1, 744, 196884]


@pytest.mark.parametrize("N", [2, 3, 5, 7, 13, 25])
def test_e2N_equals_eta_log_derivative(N):
    a, b = e2N_series(N, 25), e2N_from_eta(N, 25)
    assert a.coeffs[:24] == b.coeffs[:24]
    assert a[0] == Fraction(N - 1, 24)
    assert normalized_weight2(N, 5)[0] == 1


def test_numerical_eta_at_i():
    # eta(i) = Gamma(1/4) / (2 pi^(3/4))
    import math
    want = math.gamma(0.25) / (2 * math.pi ** 0.75)
    assert abs(eval_eta(1j) - want) < 1e-14


def test_numerical_e2N_matches_series():
    tau = 0.1 + 1.1j
    s = e2N_series(5, 40)
    assert abs(eval_e2N(5, tau) - s.evaluate(tau)) < 1e-12


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25])
def test_functional_equations(N):
    rng = random.Random(N)
    for _ in range(5):
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 1.5))
        r = check_functional_equations(N, tau)
        assert r.passed, r


def test_functional_equation_detects_wrong_kappa():
    from genus0.hauptmodul import hauptmodul_record
    rec = hauptmodul_record(2)
    r = check_functional_equations(2, 0.2 + 1j, hauptmodul=rec.product, kappa=4097)
    assert not r.passed and r.fricke_residual > 1e-5
