"""Eta-product Hauptmoduln h_N of the genus-zero curves X0(N)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from genus0.etaforms import EtaProduct, eta_product_series
from genus0.exactmath import QuadraticNumber, divisors, nullspace, quad_sqrt_of_rational, rational_sqrt
from genus0.levels import genus0_levels, psi


class HauptmodulError(ArithmeticError):
    pass


class NoSolutionError(HauptmodulError):
    pass


class NonUniqueSolutionError(HauptmodulError):
    pass


class NonIntegralSolutionError(HauptmodulError):
    pass


class KappaNotRationalError(HauptmodulError):
    pass


@dataclass(frozen=True)
class HauptmodulRecord:
    level: int
    product: EtaProduct
    kappa: Fraction
    kappa_sqrt: QuadraticNumber
    verified: bool


def _conditions(N: int) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Linear conditions on (r_delta) as rows A and right-hand side b."""
    ds = divisors(N)
    rows = [
        [Fraction(d) for d in ds],            # order -1 at infinity
        [Fraction(N // d) for d in ds],       # order +1 at 0
        [Fraction(1) for _ in ds],            # weight zero
    ]
    rhs = [Fraction(-24), Fraction(24), Fraction(0)]
    from math import gcd
    for c in ds:
        if c in (1, N):
            continue
        scale = (N // c) * gcd(c, N // c)
        rows.append([Fraction(scale * gcd(d, c) ** 2, d) for d in ds])
        rhs.append(Fraction(0))
    return rows, rhs


def solve_hauptmodul_exponents(N: int) -> EtaProduct:
    if N < 2 or N not in genus0_levels(25):
        raise ValueError(f"X0({N}) is not a genus-zero curve with N >= 2")
    rows, rhs = _conditions(N)
    # homogenize: kernel vectors (r, t) of [A | -b] with t != 0 are solutions r/t
    aug = [row + [-b] for row, b in zip(rows, rhs)]
    kern = nullspace(aug)
    sols = [v for v in kern if v[-1] != 0]
    if not sols:
        raise NoSolutionError(f"no exponents satisfy the conditions for N={N}")
    if len(kern) > 1:
        raise NonUniqueSolutionError(f"{len(kern) - 1}-dimensional family of exponents for N={N}")
    v = sols[0]
    r = [Fraction(x, v[-1]) for x in v[:-1]]
    if any(x.denominator != 1 for x in r):
        raise NonIntegralSolutionError(f"exponents {r} are not integers")
    p = EtaProduct(N, dict(zip(divisors(N), (int(x) for x in r))))
    if rational_sqrt(_square_condition_value(p)) is None:
        raise KappaNotRationalError(f"square condition fails for N={N}")
    return p


def _square_condition_value(p: EtaProduct) -> Fraction:
    out = Fraction(1)
    for d, r in p.exponents.items():
        out *= Fraction(p.level // d) ** r
    return out


def fricke_constant(p: EtaProduct) -> Fraction:
    """kappa with h(-1/(N tau)) * h(tau) = kappa, i.e. prod (N/delta)^(r_delta/2)."""
    k = rational_sqrt(_square_condition_value(p))
    if k is None:
        raise KappaNotRationalError("kappa not rational")
    return k


def verify_hauptmodul(rec_or_product, prec: int | None = None) -> bool:
    """True iff the eta product expands as q^-1 + O(1) with leading coefficient 1."""
    p = rec_or_product.product if isinstance(rec_or_product, HauptmodulRecord) else rec_or_product
    if prec is None:
        prec = 2 * psi(p.level) + 12
    s = eta_product_series(p, prec)
    return s.offset == -1 and s.leading == 1


@lru_cache(maxsize=None)
def hauptmodul_record(N: int) -> HauptmodulRecord:
    p = solve_hauptmodul_exponents(N)
    kappa = fricke_constant(p)
    return HauptmodulRecord(N, p, kappa, quad_sqrt_of_rational(kappa), verify_hauptmodul(p))


def hauptmodul_series(N: int, prec: int | None = None):
    if prec is None:
        prec = 2 * psi(N) + 12
    return eta_product_series(hauptmodul_record(N).product, prec)


HAUPTMODUL_LEVELS = tuple(n for n in genus0_levels(25) if n > 1)
