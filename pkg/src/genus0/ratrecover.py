"""Express modular functions on a genus-zero X0(N) as rational functions of h.

Work in H = 1/h, a uniformizer at the cusp.  If F(H) is the target written in
H, a relation F * B(H) = P(H) with polynomial B, P shows up as a kernel vector
of a Hankel matrix built from the coefficients of F.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from genus0.exactmath import IntPolynomial, RationalFunction, nullspace
from genus0.qseries import SeriesError, TruncatedSeries, series_compose, series_inv, series_revert


class RecoveryError(ArithmeticError):
    pass


class PrecisionExhaustedError(RecoveryError):
    pass


class KernelDimensionError(RecoveryError):
    def __init__(self, degree: int, dim: int):
        super().__init__(f"kernel dimension {dim} != 1 at degree {degree}")
        self.degree, self.dim = degree, dim


@dataclass
class RecoveryWorkspace:
    level: int | None
    hSeries: TruncatedSeries
    HSeries: TruncatedSeries
    QofH: TruncatedSeries
    degree: int | None = None
    moments: list[Fraction] = field(default_factory=list)

    @classmethod
    def for_hauptmodul(cls, h: TruncatedSeries, level: int | None = None) -> "RecoveryWorkspace":
        H, Q = _uniformizer(h)
        return cls(level, h, H, Q)

    def in_uniformizer(self, target: TruncatedSeries) -> TruncatedSeries:
        """target(q(H)) as a series in H."""
        if target.offset.denominator != 1:
            raise RecoveryError("target must have an integral q-offset")
        return series_compose(target, self.QofH)


@lru_cache(maxsize=64)
def _uniformizer(h: TruncatedSeries) -> tuple[TruncatedSeries, TruncatedSeries]:
    if h.is_zero() or h.offset != -1 or h.leading != 1:
        raise RecoveryError("h must be a normalized Hauptmodul q^-1 + O(1)")
    H = series_inv(h)
    return H, series_revert(H)


def moment_matrix(F: TruncatedSeries, n: int) -> list[list[Fraction]]:
    """(n+2)x(n+2) Hankel matrix M[r][c] = F_{r+c+v}, v the H-valuation of F."""
    v = int(F.valuation)
    return [[F[r + c + v] for c in range(n + 2)] for r in range(n + 2)]


def shifted_moment_matrix(moments: Sequence[Fraction], n: int) -> list[list[Fraction]]:
    """Matrix for J(H) = 1/H + a_0 + a_1 H + ...: first row 1, a_0 .. a_n, then shifted windows."""
    seq = [Fraction(1)] + [Fraction(a) for a in moments]
    if len(seq) < 2 * n + 3:
        raise PrecisionExhaustedError(f"need {2 * n + 2} moments, have {len(moments)}")
    return [seq[r: r + n + 2] for r in range(n + 2)]


def _candidate(F: TruncatedSeries, n: int, kernel: list[int]) -> RationalFunction:
    v = int(F.valuation)
    # B'(H) = sum_c k_c H^(n+1-c)
    b = [Fraction(0)] * (n + 2)
    for c, k in enumerate(kernel):
        b[n + 1 - c] = Fraction(k)
    top = n + 1 + v  # F * B' agrees with a polynomial of degree < top
    p = {}
    for m in range(v, top):
        p[m] = sum((b[i] * F[m - i] for i in range(0, min(n + 1, m - v) + 1)), Fraction(0))
    K = n + 1 + max(0, v - 1)
    num = [Fraction(0)] * (K - v + 1)
    den = [Fraction(0)] * (K + 1)
    for m, c in p.items():
        num[K - m] += c
    for i, c in enumerate(b):
        den[K - i] += c
    return RationalFunction.from_rational_coeffs(num, den)


def _max_degree(F: TruncatedSeries) -> int:
    # the matrix reads F_v .. F_{2n+2+v}; keep one coefficient spare for verification
    return (int(F.abs_prec) - int(F.valuation) - 4) // 2


def express_in_hauptmodul(target: TruncatedSeries, h: TruncatedSeries, degree: int | None = None,
                          *, level: int | None = None, max_degree: int | None = None) -> RationalFunction:
    """Rational function f with f(h) = target to the available precision.

    With ``degree`` given the kernel at that size must be one-dimensional.
    Otherwise sizes n = 0, 1, ... are tried until a candidate verifies.
    """
    ws = RecoveryWorkspace.for_hauptmodul(h, level)
    F = ws.in_uniformizer(target)
    if F.is_zero():
        return RationalFunction.constant(0)
    ws.moments = list(F.coeffs)
    cap = _max_degree(F)
    if max_degree is None and level is not None:
        from genus0.levels import psi
        max_degree = 3 * psi(level)
    if max_degree is not None:
        cap = min(cap, max_degree)
    if degree is not None:
        if degree > _max_degree(F):
            raise PrecisionExhaustedError(f"precision exhausted at degree {degree}")
        kern = nullspace(moment_matrix(F, degree))
        if len(kern) != 1:
            raise KernelDimensionError(degree, len(kern))
        ws.degree = degree
        return _candidate(F, degree, kern[0])
    last_dim = None
    for n in range(0, cap + 1):
        kern = nullspace(moment_matrix(F, n))
        if len(kern) != 1:
            last_dim = (n, len(kern))
            continue
        f = _candidate(F, n, kern[0])
        if verify_identity(f, h, target):
            ws.degree = n
            return f
    if last_dim is not None and last_dim[1] > 1:
        raise PrecisionExhaustedError(
            f"precision exhausted: no degree up to {cap} verifies (kernel dimension {last_dim[1]} at {last_dim[0]})")
    raise PrecisionExhaustedError(f"precision exhausted: no degree up to {cap} verifies")


def _poly_at_series(p: IntPolynomial, h: TruncatedSeries) -> TruncatedSeries:
    acc = None
    for c in reversed(p.coeffs):
        acc = TruncatedSeries([c], 0, h.prec) if acc is None else acc * h + c
    return acc if acc is not None else TruncatedSeries.zero(h.abs_prec)


def verify_identity(f: RationalFunction, h: TruncatedSeries, target: TruncatedSeries) -> bool:
    """num(h) - target * den(h) vanishes to the precision both series carry."""
    try:
        diff = _poly_at_series(f.num, h) - target * _poly_at_series(f.den, h)
    except SeriesError:
        return False
    # require at least the constant term to have been compared
    return diff.is_zero() and diff.abs_prec > 0


def evaluate_at_series(f: RationalFunction, h: TruncatedSeries) -> TruncatedSeries:
    """f(h) as a q-series."""
    return _poly_at_series(f.num, h) / _poly_at_series(f.den, h)


def default_precision(N: int) -> int:
    from genus0.levels import psi
    return 2 * psi(N) + 12


@lru_cache(maxsize=None)
def recover_j(N: int, prec: int | None = None) -> RationalFunction:
    from genus0.etaforms import j_series
    from genus0.hauptmodul import hauptmodul_series
    from genus0.levels import psi
    prec = prec or default_precision(N)
    return express_in_hauptmodul(j_series(prec), hauptmodul_series(N, prec), degree=psi(N))


@lru_cache(maxsize=None)
def recover_j_minus_1728(N: int, prec: int | None = None) -> RationalFunction:
    from genus0.etaforms import j_series
    from genus0.hauptmodul import hauptmodul_series
    from genus0.levels import psi
    prec = prec or default_precision(N)
    return express_in_hauptmodul(j_series(prec) - 1728, hauptmodul_series(N, prec), degree=psi(N))
