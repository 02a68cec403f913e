# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_purepy``."""
from libc.math cimport sqrtl


def mul_trunc(list a, list b, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i, j, la = len(a), lb = len(b), stop
    cdef object x, y
    if la > n:
        la = n
    for i in range(la):
        x = a[i]
        if not x:
            continue
        stop = lb if lb < n - i else n - i
        for j in range(stop):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


cdef inline long long _isqrt(long long v):
    cdef long long r = <long long> sqrtl(<long double> v)
    while r * r > v:
        r -= 1
    while (r + 1) * (r + 1) <= v:
        r += 1
    return r


def _norm_search_c(long long num, long long den, long long d, long long bound):
    cdef long long q, q2, target, a, rest, b2, b
    for q in range(1, bound + 1):
        q2 = q * q
        if (num * q2) % den:
            continue
        target = num * q2 // den
        for a in range(bound + 1):
            rest = a * a - target
            if rest % d:
                continue
            b2 = rest // d
            if b2 < 0:
                continue
            b = _isqrt(b2)
            if b * b == b2 and b <= bound:
                return a, b, q
    return None


def norm_search(num, den, d, bound):
    # all intermediates are bounded by bound^2 * max(|num|, |d|, den); stay in int64
    worst = (bound + 1) * (bound + 1) * max(abs(num), abs(d), den, 1)
    if worst >= (1 << 62):
        from genus0._purepy import norm_search as slow
        return slow(num, den, d, bound)
    return _norm_search_c(num, den, d, bound)
