"""Arithmetic invariants of X0(N): index, elliptic points, cusps, genus."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from genus0.etaforms import EtaProduct
from genus0.exactmath import divisors, euler_phi, factorize, legendre_symbol


@dataclass(frozen=True)
class LevelInvariants:
    level: int
    degree: int
    eps2: int
    eps3: int
    eps_inf: int
    genus: int


@dataclass(frozen=True)
class CuspDatum:
    """A cusp a/d of X0(N); width_scale is the integral factor (N/d)*gcd(d, N/d)."""

    denominator: int
    width_scale: int
    numerator: int = 1


def psi(N: int) -> int:
    if N < 1:
        raise ValueError("level must be positive")
    out = Fraction(N)
    for p in factorize(N) if N > 1 else ():
        out *= Fraction(p + 1, p)
    assert out.denominator == 1
    return int(out)


def _eps2(N: int) -> int:
    if N % 4 == 0:
        return 0
    out = 1
    for p in factorize(N) if N > 1 else ():
        out *= 1 + (0 if p == 2 else legendre_symbol(-1, p))  # (-4/2) = 0
    return out


def _eps3(N: int) -> int:
    if N % 9 == 0:
        return 0
    out = 1
    for p in factorize(N) if N > 1 else ():
        if p == 2:
            ls = -1  # Kronecker symbol (-3/2); 2 is inert in Q(sqrt(-3))
        elif p == 3:
            ls = 0
        else:
            ls = legendre_symbol(-3, p)
        out *= 1 + ls
    return out


def _eps_inf(N: int) -> int:
    return sum(euler_phi(gcd(d, N // d)) for d in divisors(N))


def level_invariants(N: int) -> LevelInvariants:
    d = psi(N)
    e2, e3, einf = _eps2(N), _eps3(N), _eps_inf(N)
    g = 1 + Fraction(d, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(einf, 2)
    if g.denominator != 1 or g < 0:
        raise ArithmeticError(f"genus formula gave {g} for N={N}")
    return LevelInvariants(N, d, e2, e3, einf, int(g))


def genus(N: int) -> int:
    return level_invariants(N).genus


def genus0_levels(search_limit: int = 1000) -> list[int]:
    """Levels N <= search_limit for which X0(N) has genus zero."""
    return [N for N in range(1, search_limit + 1) if genus(N) == 0]


def cusps(N: int) -> list[CuspDatum]:
    """One CuspDatum per cusp of X0(N): phi(gcd(d, N/d)) of them for each d | N."""
    out = []
    for d in divisors(N):
        g = gcd(d, N // d)
        scale = (N // d) * g
        seen = set()
        a = 1
        while len(seen) < euler_phi(g):
            if gcd(a, d) == 1 and gcd(a % g, g) == 1 and a % g not in seen:
                seen.add(a % g)
                out.append(CuspDatum(d, scale, a))
            a += 1
    return out


def eta_order_condition(p: EtaProduct, d: int) -> Fraction:
    """Scaled order of vanishing of the eta product at the cusps with denominator d.

    (N/d) * gcd(d, N/d) * sum_delta r_delta * gcd(delta, d)^2 / (24 * delta).
    """
    N = p.level
    if d < 1 or N % d:
        raise ValueError(f"{d} does not divide {N}")
    s = sum((Fraction(r * gcd(delta, d) ** 2, 24 * delta) for delta, r in p.exponents.items()),
            Fraction(0))
    return (N // d) * gcd(d, N // d) * s
