"""Strict K-curves over quadratic fields: norm equations and twist families.

A rational point on X0+(N) lifts to h in L = Q(sqrt(D)) with conj(h) = kappa/h.
A strict twist over L exists iff N or -N is a norm from L, and the twist by
alpha is strict iff alpha * conj(alpha) lies in -N (L^x)^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from genus0 import _kernels
from genus0.exactmath import (QuadraticNumber, factorize, is_prime, legendre_symbol, quad_norm,
                              rational_sqrt, squarefree_decomposition)
from genus0.hauptmodul import hauptmodul_record

SQUARE_KAPPA_LEVELS = (2, 3, 4, 7)


class PreconditionError(ValueError):
    pass


class DegenerateParameterError(ArithmeticError):
    pass


class CoefficientPoleError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# Hilbert symbols

def _split(n: int, p: int) -> tuple[int, int]:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


def _as_integer_class(x) -> int:
    """An integer in the same square class as the rational x."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    return x.numerator * x.denominator


def hilbert_symbol(a, b, place) -> int:
    """(a, b)_v for nonzero rationals; ``place`` is a prime or "inf"."""
    a, b = _as_integer_class(a), _as_integer_class(b)
    if place in ("inf", "oo", float("inf")):
        return -1 if a < 0 and b < 0 else 1
    if not isinstance(place, int) or not is_prime(place):
        raise ValueError(f"place must be a prime or 'inf', got {place!r}")
    p = place
    alpha, u = _split(a, p)
    beta, v = _split(b, p)
    if p == 2:
        def eps(x):
            return ((x - 1) // 2) % 2

        def omega(x):
            return ((x * x - 1) // 8) % 2

        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * legendre_symbol(u, p) ** beta * legendre_symbol(v, p) ** alpha


def relevant_places(*xs) -> list:
    """2, odd primes dividing some argument, and infinity."""
    primes = {2}
    for x in xs:
        x = Fraction(x)
        for m in (x.numerator, x.denominator):
            primes.update(factorize(abs(m)))
    return sorted(primes) + ["inf"]


def _check_radicand(D: int) -> None:
    s, core = squarefree_decomposition(D)
    if D == 0 or s != 1 or D == 1:
        raise ValueError(f"D must be a squarefree integer other than 0 and 1, got {D}")


def is_norm(n, D: int) -> bool:
    """Whether x^2 - D y^2 = n has a rational solution (local test at every place)."""
    _check_radicand(D)
    n = Fraction(n)
    if n == 0:
        raise ValueError("n must be nonzero")
    return all(hilbert_symbol(D, n, v) == 1 for v in relevant_places(D, n))


def norm_witness(n, D: int, bound: int):
    """Rational (x, y) with x^2 - D y^2 = n and common denominator at most ``bound``.

    Denominators are tried in increasing order, then numerators of x.
    """
    n = Fraction(n)
    hit = _kernels.norm_search(n.numerator, n.denominator, D, bound)
    if hit is None:
        return None
    a, b, q = hit
    return Fraction(a, q), Fraction(b, q)


@dataclass(frozen=True)
class NormDecision:
    level: int
    radicand: int
    plusIsNorm: bool
    minusIsNorm: bool
    witness: tuple[Fraction, Fraction, int] | None = None

    @property
    def exists(self) -> bool:
        return self.plusIsNorm or self.minusIsNorm


def strict_kcurve_exists(N: int, D: int, bound: int = 50) -> NormDecision:
    plus, minus = is_norm(N, D), is_norm(-N, D)
    witness = None
    for sign, ok in ((1, plus), (-1, minus)):
        if ok:
            w = norm_witness(sign * N, D, bound)
            if w is not None:
                witness = (w[0], w[1], sign)
                break
    return NormDecision(N, D, plus, minus, witness)


def norm_times_square_search(n, D: int, bound: int):
    """Search n = gamma^2 (a^2 - b^2 D) with gamma in Q or Q*sqrt(D).

    Rescaling (a, b) only changes gamma, so integer pairs with 0 <= a, b <= bound
    suffice.  Returns (gamma, a, b) with gamma a QuadraticNumber, or None.
    Independent of the local criterion; used to cross-check it.
    """
    n = Fraction(n)
    key = n.numerator * n.denominator  # n / m is a square iff key * m is
    for a in range(bound + 1):
        for b in range(bound + 1):
            m = a * a - b * b * D
            if m == 0:
                continue
            if key * m > 0 and isqrt(key * m) ** 2 == key * m:
                return QuadraticNumber(rational_sqrt(n / m), 0, D), Fraction(a), Fraction(b)
            if key * m * D > 0 and isqrt(key * m * D) ** 2 == key * m * D:
                return QuadraticNumber(0, rational_sqrt(n / (m * D)), D), Fraction(a), Fraction(b)
    return None


# ---------------------------------------------------------------------------
# conic parameterization and the conjugation relations

def conic_parameterize(N: int, D: int, t) -> QuadraticNumber:
    """h = sqrt(kappa) (t sqrt(D) + 1)^2 / (1 - D t^2), a point with h * conj(h) = kappa."""
    if N not in SQUARE_KAPPA_LEVELS:
        raise PreconditionError(f"kappa_{N} is not a rational square")
    t = Fraction(t)
    den = 1 - D * t * t
    if den == 0:
        raise DegenerateParameterError("parameter on degenerate locus: D t^2 = 1")
    root = rational_sqrt(hauptmodul_record(N).kappa)
    w = QuadraticNumber(1, t, D)
    return w * w * (root / den)


def _coefficients_at(N: int, h: QuadraticNumber) -> tuple:
    from genus0.curves import isogenous_pair_coeffs
    c = isogenous_pair_coeffs(N)
    try:
        return tuple(f(h) for f in (c.A4, c.A6, c.A4p, c.A6p))
    except ZeroDivisionError as exc:
        raise CoefficientPoleError(f"h = {h} is a pole of a coefficient function") from exc


def _as_quadratic(x, d: int) -> QuadraticNumber:
    return x if isinstance(x, QuadraticNumber) else QuadraticNumber(x, 0, d)


def check_conjugation_relations(N: int, h: QuadraticNumber) -> bool:
    """conj(A4(h)) = N^2 A4'(h) and conj(A6(h)) = -N^3 A6'(h)."""
    h = _as_quadratic(h, 1)
    kappa = hauptmodul_record(N).kappa
    if h * h.conjugate() != kappa:
        raise PreconditionError(f"h * conj(h) = {quad_norm(h)} differs from kappa_{N} = {kappa}")
    try:
        a4, a6, a4p, a6p = (_as_quadratic(x, h.d) for x in _coefficients_at(N, h))
    except CoefficientPoleError as exc:
        raise PreconditionError(str(exc)) from exc
    return a4.conjugate() == N * N * a4p and a6.conjugate() == -(N**3) * a6p


# ---------------------------------------------------------------------------
# twist families

@dataclass(frozen=True)
class TwistSpec:
    level: int
    radicand: int
    t: Fraction
    alpha: QuadraticNumber

    def __post_init__(self):
        if 1 - self.radicand * Fraction(self.t) ** 2 == 0:
            raise DegenerateParameterError("parameter on degenerate locus: D t^2 = 1")


@dataclass(frozen=True)
class TwistFamily:
    spec: TwistSpec
    h: QuadraticNumber
    E: tuple[QuadraticNumber, QuadraticNumber]
    Ep: tuple[QuadraticNumber, QuadraticNumber]
    strict: bool


def is_strict_twist(N: int, alpha: QuadraticNumber, D: int) -> bool:
    """Whether alpha * conj(alpha) lies in -N (L^x)^2 for L = Q(sqrt(D))."""
    alpha = _as_quadratic(alpha, D)
    nm = quad_norm(alpha)
    if nm == 0:
        raise ValueError("alpha must be nonzero")
    return QuadraticNumber(-nm / N, 0, D).is_square()


def strict_twist_family(spec: TwistSpec) -> TwistFamily:
    N, D = spec.level, spec.radicand
    alpha = _as_quadratic(spec.alpha, D)
    if alpha.b and alpha.d != squarefree_decomposition(D)[1]:
        raise PreconditionError("alpha does not lie in Q(sqrt(D))")
    h = conic_parameterize(N, D, spec.t)
    a4, a6, a4p, a6p = (_as_quadratic(x, D) for x in _coefficients_at(N, h))
    a2, a3 = alpha * alpha, alpha * alpha * alpha
    E = (-a2 * a4 / 48, a3 * a6 / 864)
    Ep = (-a2 * a4p / 48, a3 * a6p / 864)
    return TwistFamily(spec, h, E, Ep, is_strict_twist(N, alpha, D))


def short_weierstrass_j(a4, a6):
    """j of y^2 = x^3 + a4 x + a6."""
    disc = 4 * a4**3 + 27 * a6 * a6
    if disc == 0:
        raise ArithmeticError("singular curve")
    return 1728 * 4 * a4**3 / disc
