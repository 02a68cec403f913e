import itertools
import random
from fractions import Fraction

import pytest
from sympy import symbols
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic

from genus0.exactmath import QuadraticNumber, quad_norm, squarefree_decomposition
from genus0.kcurves import (DegenerateParameterError, PreconditionError, TwistSpec, check_conjugation_relations,
                            conic_parameterize, hilbert_symbol, is_norm, is_strict_twist, norm_times_square_search,
                            norm_witness, relevant_places, short_weierstrass_j, strict_kcurve_exists,
                            strict_twist_family)
from genus0.ratrecover import recover_j

x_, y_, z_ = symbols("x y z", integer=True)


def squarefree_radicands(lo, hi):
    return [D for D in range(lo, hi + 1) if D not in (0, 1) and squarefree_decomposition(D)[0] == 1]


def local_solvable_mod(a, b, p, k):
    # primitive solution of z^2 = a x^2 + b y^2 modulo p^k
    m = p**k
    sq = {}
    for z in range(m):
        sq.setdefault(z * z % m, []).append(z)
    for x, y in itertools.product(range(m), repeat=2):
        r = (a * x * x + b * y * y) % m
        for z in sq.get(r, ()):
            if x % p or y % p or z % p:
                return True
    return False


def test_hilbert_examples():
    assert hilbert_symbol(-1, -1, "inf") == -1
    assert hilbert_symbol(5, 2, 5) == -1
    assert not local_solvable_mod(5, 2, 5, 3)
    with pytest.raises(ValueError):
        hilbert_symbol(2, 3, 4)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_hilbert_odd_p_against_brute_force(p):
    vals = [a for a in range(-12, 13) if a and a % (p * p)]
    rng = random.Random(p)
    for a, b in (tuple(rng.sample(vals, 2)) for _ in range(25)):
        want = 1 if local_solvable_mod(a, b, p, 3) else -1
        assert hilbert_symbol(a, b, p) == want, (a, b, p)


def test_product_formula():
    rng = random.Random(200)
    for _ in range(200):
        a = Fraction(rng.choice([-1, 1]) * rng.randint(1, 400), rng.randint(1, 60))
        b = Fraction(rng.choice([-1, 1]) * rng.randint(1, 400), rng.randint(1, 60))
        prod = 1
        for v in relevant_places(a, b):
            prod *= hilbert_symbol(a, b, v)
        assert prod == 1, (a, b)


def test_is_norm_examples():
    assert is_norm(2, -2)
    assert not is_norm(2, 5)
    assert all(is_norm(1, D) for D in squarefree_radicands(-20, 20))


def test_is_norm_against_ternary_solver_and_search():
    for D in squarefree_radicands(-30, 30):
        for n in range(-10, 11):
            if n == 0:
                continue
            sol = diop_ternary_quadratic(x_**2 - D * y_**2 - n * z_**2)
            oracle = sol is not None and sol[0] is not None and any(sol)
            assert is_norm(n, D) == oracle, (n, D)
            w = norm_witness(n, D, 6)
            if w is not None:
                assert w[0] ** 2 - D * w[1] ** 2 == n
                assert is_norm(n, D)


def test_norm_witness_examples():
    assert norm_witness(2, -2, 10) == (0, 1)
    assert norm_witness(2, -1, 10) == (1, 1)
    assert norm_witness(2, 5, 1000) is None


def test_norm_times_square_equivalence():
    # n = g^2 N(a + b sqrt D) with g in Q or Q sqrt D  <=>  n or -n is a norm
    for D in squarefree_radicands(-30, 30):
        for n in range(-10, 11):
            if n == 0:
                continue
            hit = norm_times_square_search(n, D, 60)
            if hit is not None:
                g, a, b = hit
                assert g * g * (a * a - b * b * D) == n
            assert (hit is not None) == (is_norm(n, D) or is_norm(-n, D)), (n, D)


def test_strict_kcurve_examples():
    dec = strict_kcurve_exists(2, -2)
    assert dec.exists and dec.plusIsNorm and dec.witness[:2] == (0, 1)
    assert not strict_kcurve_exists(2, 5).exists
    d3 = strict_kcurve_exists(3, -1)
    assert not d3.plusIsNorm and not d3.minusIsNorm


def test_conic_examples():
    assert conic_parameterize(2, 3, 0) == 64
    h = conic_parameterize(2, -1, 1)
    assert h == QuadraticNumber(0, 64, -1) and quad_norm(h) == 4096
    assert quad_norm(conic_parameterize(7, -3, Fraction(1, 2))) == 49
    with pytest.raises(DegenerateParameterError):
        conic_parameterize(2, 4, Fraction(1, 2))
    with pytest.raises(PreconditionError):
        conic_parameterize(5, 2, 1)


def test_conjugation_examples():
    assert check_conjugation_relations(2, QuadraticNumber(64))
    assert check_conjugation_relations(2, QuadraticNumber(0, 64, -1))
    with pytest.raises(PreconditionError):
        check_conjugation_relations(3, QuadraticNumber(1, 1, 2))


@pytest.mark.parametrize("N", [2, 3, 4, 7])
def test_conjugation_random(N):
    rng = random.Random(N)
    radicands = squarefree_radicands(-30, 30)
    done = 0
    while done < 25:
        D = rng.choice(radicands)
        t = Fraction(rng.randint(-20, 20), rng.randint(1, 12))
        try:
            h = conic_parameterize(N, D, t)
            assert check_conjugation_relations(N, h)
        except (DegenerateParameterError, PreconditionError):
            continue
        done += 1


def test_twist_closed_forms_level_2():
    rng = random.Random(22)
    radicands = squarefree_radicands(-30, 30)
    for _ in range(10):
        D = rng.choice(radicands)
        t = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if 1 - D * t * t == 0:
            continue
        alpha = QuadraticNumber(rng.randint(-5, 5) or 1, rng.randint(-3, 3), D)
        fam = strict_twist_family(TwistSpec(2, D, t, alpha))
        s = QuadraticNumber(0, t, D)
        a2, a3 = alpha * alpha, alpha * alpha * alpha
        assert fam.E == (-a2 * (5 - 3 * s) / 96, a3 * (-7 + 9 * s) / 1728)
        assert fam.Ep == (-a2 * (5 + 3 * s) / 384, a3 * (7 + 9 * s) / 13824)


def test_twist_strictness():
    assert not is_strict_twist(2, QuadraticNumber(0, 1, -2), -2)
    assert is_strict_twist(2, QuadraticNumber(1, 1, -1), -1)
    fam = strict_twist_family(TwistSpec(2, -1, Fraction(0), QuadraticNumber(1, 1, -1)))
    assert fam.strict


@pytest.mark.parametrize("N,D,t", [(2, -1, Fraction(1, 3)), (3, 5, Fraction(2, 7)), (4, -3, Fraction(1)),
                                   (7, 2, Fraction(-3, 5))])
def test_twist_j_invariants(N, D, t):
    fam = strict_twist_family(TwistSpec(N, D, t, QuadraticNumber(2, 1, D)))
    j = recover_j(N)
    assert short_weierstrass_j(*fam.E) == j(fam.h)
    assert short_weierstrass_j(*fam.Ep) == j(fam.h.conjugate())
