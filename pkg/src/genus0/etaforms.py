"""q-expansions of eta, eta products, Eisenstein series and j.

Also floating-point evaluation on the upper half-plane, used only as a
diagnostic for the transformation laws (never fed back into exact code).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from genus0.exactmath import bernoulli, divisor_sum, divisors
from genus0.qseries import TruncatedSeries, series_log_derivative


@dataclass(frozen=True)
class EtaProduct:
    """prod_{delta | level} eta(delta*tau)^exponents[delta]."""

    level: int
    exponents: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be positive")
        exps = {int(d): int(r) for d, r in dict(self.exponents).items()}
        for d in exps:
            if d < 1 or self.level % d:
                raise ValueError(f"{d} does not divide the level {self.level}")
        full = {d: exps.get(d, 0) for d in divisors(self.level)}
        object.__setattr__(self, "exponents", full)

    def __hash__(self):
        return hash((self.level, tuple(sorted(self.exponents.items()))))

    def as_tuple(self) -> tuple[int, ...]:
        """Exponents in increasing divisor order."""
        return tuple(self.exponents[d] for d in divisors(self.level))

    @property
    def q_offset(self) -> Fraction:
        return Fraction(sum(r * d for d, r in self.exponents.items()), 24)

    def __str__(self):
        parts = [f"eta({'' if d == 1 else d}tau)^{r}" for d, r in self.exponents.items() if r]
        return " * ".join(parts) or "1"


@dataclass(frozen=True)
class HalfPlanePoint:
    re: float
    im: float

    def __post_init__(self):
        if not self.im > 0:
            raise ValueError("tau must lie in the upper half-plane")

    @property
    def tau(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def of(cls, tau: complex) -> "HalfPlanePoint":
        return cls(tau.real, tau.imag)


# ---------------------------------------------------------------------------
# exact q-expansions

@lru_cache(maxsize=64)
def eta_series(prec: int) -> TruncatedSeries:
    """q^(1/24) * prod (1 - q^n), from the pentagonal number theorem."""
    if prec < 1:
        raise ValueError("precision must be positive")
    cs = [0] * prec
    k = 0
    while True:
        # generalized pentagonal numbers k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
        hit = False
        for kk in ((k,) if k == 0 else (k, -k)):
            e = kk * (3 * kk - 1) // 2
            if e < prec:
                cs[e] = -1 if kk % 2 else 1
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return TruncatedSeries(cs, Fraction(1, 24))


def eta_product_series(p: EtaProduct, prec: int) -> TruncatedSeries:
    """The eta product with ``prec`` trustworthy coefficients."""
    out = None
    for d, r in p.exponents.items():
        if r == 0:
            continue
        base = TruncatedSeries(eta_series(prec).coeffs, 0).substitute_power(d)
        base = TruncatedSeries(base.coeffs[:prec], 0)
        term = base**r
        out = term if out is None else out * term
    if out is None:
        return TruncatedSeries.one(prec)
    return TruncatedSeries(out.coeffs, p.q_offset)


@lru_cache(maxsize=64)
def eisenstein_series(k: int, prec: int) -> TruncatedSeries:
    if k < 4 or k % 2:
        raise ValueError(f"weight must be even and at least 4, got {k}")
    c = -2 * k / bernoulli(k)
    return TruncatedSeries([1] + [c * divisor_sum(n, k - 1) for n in range(1, prec)], 0, prec)


@lru_cache(maxsize=64)
def e2N_series(N: int, prec: int) -> TruncatedSeries:
    """(N-1)/24 + sum sigma_1(n) (q^n - N q^(Nn))."""
    if N < 2:
        raise ValueError("level must be at least 2")
    cs = [Fraction(N - 1, 24)] + [Fraction(0)] * (prec - 1)
    for n in range(1, prec):
        s = divisor_sum(n, 1)
        cs[n] += s
        if N * n < prec:
            cs[N * n] -= N * s
    return TruncatedSeries(cs, 0, prec)


def e2N_from_eta(N: int, prec: int) -> TruncatedSeries:
    """q d/dq log(eta(q^N)/eta(q)), the defining construction of E2^(N)."""
    nu = eta_product_series(EtaProduct(N, {1: -1, N: 1}), prec)
    return series_log_derivative(nu)


def normalized_weight2(N: int, prec: int) -> TruncatedSeries:
    """E2^(N) scaled to constant term 1, the weight-2 form used for curve models."""
    return e2N_series(N, prec) * Fraction(24, N - 1)


@lru_cache(maxsize=32)
def j_series(prec: int) -> TruncatedSeries:
    """1728 E4^3 / (E4^3 - E6^2) with ``prec`` coefficients starting at q^-1."""
    # E4^3 - E6^2 = 1728 q + ..., so one extra input coefficient is consumed
    e4 = eisenstein_series(4, prec + 1)
    e6 = eisenstein_series(6, prec + 1)
    e43 = e4**3
    return (e43 * 1728) / (e43 - e6 * e6)


# ---------------------------------------------------------------------------
# numerical evaluation

_TAIL = 1e-17


def eval_eta(tau) -> complex:
    """eta(tau) by the q-product, stopping once |q^n| drops below 1e-17."""
    t = tau.tau if isinstance(tau, HalfPlanePoint) else complex(tau)
    if t.imag <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    q = cmath.exp(2j * math.pi * t)
    aq = abs(q)
    prod = 1 + 0j
    qn = q
    n = 1
    while abs(qn) > _TAIL or n < 2:
        prod *= 1 - qn
        qn *= q
        n += 1
        if aq == 0:
            break
    return cmath.exp(1j * math.pi * t / 12) * prod


def eval_eta_product(p: EtaProduct, tau) -> complex:
    t = tau.tau if isinstance(tau, HalfPlanePoint) else complex(tau)
    out = 1 + 0j
    for d, r in p.exponents.items():
        if r:
            out *= eval_eta(d * t) ** r
    return out


def eval_e2N(N: int, tau) -> complex:
    """E2^(N)(tau) by the Lambert series sum n q^n/(1-q^n) - N * (same at q^N)."""
    t = tau.tau if isinstance(tau, HalfPlanePoint) else complex(tau)
    q = cmath.exp(2j * math.pi * t)

    def lambert(x: complex) -> complex:
        acc, xn, n = 0j, x, 1
        while abs(xn) * n > _TAIL:
            acc += n * xn / (1 - xn)
            xn *= x
            n += 1
        return acc

    return (N - 1) / 24 + lambert(q) - N * lambert(q**N)


@dataclass
class FunctionalEquationReport:
    level: int
    tau: complex
    nu_residual: float
    e2_residual: float
    fricke_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return max(self.nu_residual, self.e2_residual, self.fricke_residual) < self.tol


def check_functional_equations(N: int, tau, tol: float = 1e-8, hauptmodul=None,
                               kappa=None) -> FunctionalEquationReport:
    """Residuals of the three Fricke transformation laws at tau.

    (i)   nu(-1/(N tau)) * sqrt(N) * nu(tau) = 1, nu = eta(N tau)/eta(tau)
    (ii)  E2^(N)(-1/(N tau)) + N tau^2 E2^(N)(tau) = 0
    (iii) h_N(-1/(N tau)) * h_N(tau) = kappa_N
    Residuals are relative to the size of the terms involved.
    """
    if hauptmodul is None or kappa is None:
        from genus0.hauptmodul import hauptmodul_record
        rec = hauptmodul_record(N)
        hauptmodul, kappa = rec.product, rec.kappa
    t = tau.tau if isinstance(tau, HalfPlanePoint) else complex(tau)
    w = -1 / (N * t)
    nu = EtaProduct(N, {1: -1, N: 1})
    r1 = abs(eval_eta_product(nu, w) * math.sqrt(N) * eval_eta_product(nu, t) - 1)
    lhs, rhs = eval_e2N(N, w), N * t * t * eval_e2N(N, t)
    r2 = abs(lhs + rhs) / max(1.0, abs(rhs))
    r3 = abs(eval_eta_product(hauptmodul, w) * eval_eta_product(hauptmodul, t) / float(kappa) - 1)
    return FunctionalEquationReport(N, t, r1, r2, r3, tol)
