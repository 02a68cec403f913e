import random

from genus0 import _kernels


def naive_mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < n:
                out[i + j] += x * y
    return out


def test_mul_trunc(kernel):
    rng = random.Random(3)
    for _ in range(50):
        a = [rng.randint(-10**20, 10**20) for _ in range(rng.randint(0, 30))]
        b = [rng.randint(-10**20, 10**20) for _ in range(rng.randint(0, 30))]
        n = rng.randint(0, 40)
        assert kernel.mul_trunc(a, b, n) == naive_mul(a, b, n)


def test_norm_search_is_a_solution(kernel):
    for n in range(-6, 7):
        if n == 0:
            continue
        for D in (-5, -2, -1, 2, 3, 5, 7):
            hit = kernel.norm_search(n, 1, D, 30)
            if hit is not None:
                a, b, q = hit
                assert a * a - D * b * b == n * q * q


def test_backends_agree():
    impls = _kernels.backends()
    results = {name: [m.norm_search(n, den, D, 40) for n in range(-8, 9) if n
                      for den in (1, 2, 3) for D in (-7, -3, -1, 2, 5, 6)]
               for name, m in impls.items()}
    vals = list(results.values())
    assert all(v == vals[0] for v in vals)


def test_large_inputs_fall_back_to_exact_search(kernel):
    # a bound large enough to overflow 64-bit intermediates must still be exact
    big = 10**15
    hit = kernel.norm_search(big * big, 1, -1, 3)
    assert hit is None or hit[0] ** 2 + hit[1] ** 2 == big * big * hit[2] ** 2
