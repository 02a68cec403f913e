"""Reference implementations of the hot kernels.

These are the fallbacks used when the compiled ``_speedups`` extension is not
available. Both modules must return identical results.
"""
from __future__ import annotations

from math import isqrt


def mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    """First ``n`` coefficients of the product of two integer sequences."""
    out = [0] * n
    lb = len(b)
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        stop = min(lb, n - i)
        for j in range(stop):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


def norm_search(num: int, den: int, d: int, bound: int):
    """Smallest solution of x^2 - d*y^2 = num/den with x = a/q, y = b/q.

    Searches q = 1..bound, then a = 0..bound, and returns ``(a, b, q)`` with
    0 <= a, b <= bound, or None.
    """
    for q in range(1, bound + 1):
        q2 = q * q
        if (num * q2) % den:
            continue
        target = num * q2 // den
        for a in range(bound + 1):
            rest = a * a - target  # = d * b^2
            if rest % d:
                continue
            b2 = rest // d
            if b2 < 0:
                continue
            b = isqrt(b2)
            if b * b == b2 and b <= bound:
                return a, b, q
    return None
