"""Truncated Laurent series in q with exact rational coefficients.

A series is ``q**offset * (c_0 + c_1 q + ... + c_{prec-1} q**(prec-1)) + O(q**(offset+prec))``.
Offsets are multiples of 1/24 (the only fractional source is eta). Every
operation returns exactly as many coefficients as its inputs justify.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from genus0 import _kernels

_OFFSET_UNIT = Fraction(1, 24)


class SeriesError(ArithmeticError):
    pass


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _to_ints(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = reduce(_lcm, (c.denominator for c in cs), 1)
    return [c.numerator * (den // c.denominator) for c in cs], den


def _from_ints(ints: Iterable[int], den: int) -> list[Fraction]:
    if den == 1:
        return [Fraction(x) for x in ints]
    return [Fraction(x, den) for x in ints]


def _mul_coeffs(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    ia, da = _to_ints(a)
    ib, db = _to_ints(b)
    return _from_ints(_kernels.mul_trunc(ia, ib, n), da * db)


class TruncatedSeries:
    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs: Iterable, offset=0, prec: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if prec is not None:
            if prec < 1:
                raise SeriesError("precision must be at least 1")
            cs = (cs + [Fraction(0)] * prec)[:prec]
        if not cs:
            raise SeriesError("a series needs at least one coefficient")
        offset = Fraction(offset)
        if (offset / _OFFSET_UNIT).denominator != 1:
            raise SeriesError(f"offset {offset} is not a multiple of 1/24")
        # move leading zeros into the offset; absolute precision is unchanged
        k = next((i for i, c in enumerate(cs) if c), None)
        if k:
            cs = cs[k:]
            offset += k
        self.offset: Fraction = offset
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- construction -------------------------------------------------------
    @classmethod
    def one(cls, prec: int) -> "TruncatedSeries":
        return cls([1], 0, prec)

    @classmethod
    def monomial(cls, exponent, prec: int, c=1) -> "TruncatedSeries":
        return cls([c], exponent, prec)

    @classmethod
    def zero(cls, abs_prec) -> "TruncatedSeries":
        """O(q**abs_prec)."""
        return cls([0], Fraction(abs_prec) - 1)

    # -- accessors ----------------------------------------------------------
    @property
    def prec(self) -> int:
        return len(self.coeffs)

    @property
    def abs_prec(self) -> Fraction:
        """Exponent of the error term O(q**abs_prec)."""
        return self.offset + len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def valuation(self) -> Fraction:
        if self.is_zero():
            raise SeriesError("zero series has no valuation")
        return self.offset

    @property
    def leading(self) -> Fraction:
        return self.coeffs[0]

    def __getitem__(self, exponent) -> Fraction:
        """Coefficient of q**exponent (zero below the offset)."""
        k = Fraction(exponent) - self.offset
        if k.denominator != 1 or k < 0:
            return Fraction(0)
        if k >= len(self.coeffs):
            raise SeriesError(f"coefficient of q^{exponent} is beyond the precision")
        return self.coeffs[int(k)]

    def coefficient_list(self, start, stop) -> list[Fraction]:
        return [self[e] for e in range(int(start), int(stop))]

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if len(self.coeffs) > 6 else ""
        return f"TruncatedSeries(q^{self.offset} * [{head}{more}] + O(q^{self.abs_prec}))"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def truncate(self, abs_prec) -> "TruncatedSeries":
        """Drop everything at or beyond q**abs_prec."""
        abs_prec = Fraction(abs_prec)
        if abs_prec >= self.abs_prec:
            return self
        n = abs_prec - self.offset
        if n < 1:
            return TruncatedSeries.zero(abs_prec)
        return TruncatedSeries(self.coeffs[: int(n)], self.offset)

    # -- ring operations ------------------------------------------------------
    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            ap = max(self.abs_prec, Fraction(1))
            n = int(ap) if ap.denominator == 1 else int(ap) + 1
            return TruncatedSeries([other], 0, max(n, 1))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if (self.offset - o.offset).denominator != 1:
            raise SeriesError("cannot add series whose offsets differ by a fraction")
        ap = min(self.abs_prec, o.abs_prec)
        off = min(self.offset, o.offset)
        n = int(ap - off)
        if n < 1:
            return TruncatedSeries.zero(ap)
        out = [Fraction(0)] * n
        for s in (self, o):
            shift = int(s.offset - off)
            for i, c in enumerate(s.coeffs):
                if shift + i >= n:
                    break
                out[shift + i] += c
        return TruncatedSeries(out, off)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.offset)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return TruncatedSeries.zero(self.abs_prec)
            return TruncatedSeries([c * other for c in self.coeffs], self.offset)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, series_inv(other))

    def __rtruediv__(self, other):
        return series_inv(self) * other

    def __pow__(self, e: int):
        return series_pow_int(self, e)

    # -- substitutions ------------------------------------------------------
    def substitute_power(self, n: int) -> "TruncatedSeries":
        """f(q) -> f(q**n) for a positive integer n."""
        if n < 1:
            raise SeriesError("q -> q^n needs n >= 1")
        out = [Fraction(0)] * (n * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[n * i] = c
        return TruncatedSeries(out, self.offset * n)

    def derivative_q(self) -> "TruncatedSeries":
        """q * d/dq applied termwise (exponents may be fractional)."""
        return TruncatedSeries(
            [c * (self.offset + i) for i, c in enumerate(self.coeffs)], self.offset,
            prec=len(self.coeffs))

    def evaluate(self, tau: complex) -> complex:
        """Numerical value of the truncated sum at q = exp(2*pi*i*tau)."""
        import cmath
        q = cmath.exp(2j * cmath.pi * tau)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * q + float(c)
        return acc * cmath.exp(2j * cmath.pi * tau * float(self.offset))


def _as_series(x) -> TruncatedSeries:
    if not isinstance(x, TruncatedSeries):
        raise TypeError(f"expected a TruncatedSeries, got {type(x).__name__}")
    return x


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a, b = _as_series(a), _as_series(b)
    if a.is_zero() or b.is_zero():
        # O(q^A) * (q^v + ...) = O(q^(A+v)); a zero factor contributes its error exponent
        lo_a = a.abs_prec if a.is_zero() else a.offset
        lo_b = b.abs_prec if b.is_zero() else b.offset
        candidates = []
        if a.is_zero():
            candidates.append(a.abs_prec + lo_b)
        if b.is_zero():
            candidates.append(b.abs_prec + lo_a)
        return TruncatedSeries.zero(min(candidates))
    n = min(a.prec, b.prec)
    return TruncatedSeries(_mul_coeffs(a.coeffs, b.coeffs, n), a.offset + b.offset)


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    a = _as_series(a)
    if a.is_zero():
        raise SeriesError("non-invertible series")
    n = a.prec
    c0 = a.coeffs[0]
    # Newton iteration on the unit part: x <- x * (2 - a*x)
    x = [1 / c0]
    k = 1
    while k < n:
        k = min(2 * k, n)
        ax = _mul_coeffs(a.coeffs[:k], x, k)
        corr = [-c for c in ax]
        corr[0] += 2
        x = _mul_coeffs(x, corr, k)
    return TruncatedSeries(x, -a.offset)


def series_pow_int(a: TruncatedSeries, e: int) -> TruncatedSeries:
    a = _as_series(a)
    if e < 0:
        return series_pow_int(series_inv(a), -e)
    if e == 0:
        return TruncatedSeries.one(a.prec)
    out = None
    base = a
    while e:
        if e & 1:
            out = base if out is None else series_mul(out, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return out


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner) for inner of positive integral valuation.

    A negative integral outer offset is handled by multiplying with an inverse
    power of inner.
    """
    outer, inner = _as_series(outer), _as_series(inner)
    if outer.offset.denominator != 1:
        raise SeriesError("composition needs an integral outer offset")
    if inner.is_zero() or inner.offset.denominator != 1 or inner.offset < 1:
        raise SeriesError("composition undefined: inner valuation must be a positive integer")
    w = int(inner.offset)
    # truncating outer costs O(q^(w*prec_outer)); inner's own error enters at q^(w+prec_inner)
    unit_prec = min(w * outer.prec, w + inner.prec)
    acc = TruncatedSeries([outer.coeffs[-1]], 0, unit_prec)
    inner_t = inner.truncate(unit_prec)
    for c in reversed(outer.coeffs[:-1]):
        acc = (acc * inner_t + c).truncate(unit_prec)
    v = int(outer.offset)
    if v == 0:
        return acc
    return acc * series_pow_int(inner, v)


def _compose_unit_coeffs(outer_c: Sequence[Fraction], inner_c: Sequence[Fraction], n: int) -> list[Fraction]:
    """Coefficients of sum_i outer_c[i] * (x*inner)^i to O(x^n)."""
    acc = [Fraction(0)] * n
    shifted = [Fraction(0)] + list(inner_c[: n - 1])
    for c in reversed(outer_c[:n]):
        acc = _mul_coeffs(acc, shifted, n) if any(acc) else [Fraction(0)] * n
        acc[0] += c
    return acc


def series_revert(a: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of a series q*(unit).

    Newton iteration Q <- Q - (a(Q) - x) / a'(Q), doubling the number of
    correct coefficients each step.
    """
    a = _as_series(a)
    if a.is_zero() or a.offset != 1:
        raise SeriesError("reversion requires valuation 1")
    n = a.prec
    unit = list(a.coeffs)
    dunit = [c * (i + 1) for i, c in enumerate(unit)]  # a'(x) = sum (i+1) unit[i] x^i
    qc = [1 / unit[0]]  # Q = x * (qc[0] + qc[1] x + ...)
    k = 1
    while k < n:
        k = min(2 * k, n)
        qk = (qc + [Fraction(0)] * k)[:k]
        aQ = _mul_coeffs(_compose_unit_coeffs(unit, qk, k), qk, k)  # a(Q)/x
        aQ[0] -= 1
        dp = _compose_unit_coeffs(dunit, qk, k)
        inv_dp = series_inv(TruncatedSeries(dp, 0)).coeffs
        inv_dp = (list(inv_dp) + [Fraction(0)] * k)[:k]
        step = _mul_coeffs(aQ, inv_dp, k)
        qc = [x - y for x, y in zip(qk, step)]
    return TruncatedSeries(qc, 1)


def series_log_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """q * d/dq log(a)."""
    a = _as_series(a)
    if a.is_zero():
        raise SeriesError("non-invertible series")
    unit = TruncatedSeries(a.coeffs, 0)
    out = [Fraction(0)] * unit.prec
    if unit.prec > 1:
        ratio = series_mul(unit.derivative_q(), series_inv(unit))
        for i in range(unit.prec):
            out[i] = ratio[i]
    out[0] += a.offset
    return TruncatedSeries(out, 0, prec=unit.prec)
