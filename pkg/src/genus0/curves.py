"""Isogenous curve pairs over X0(N), CM values of j, and the 2-/3-isogeny models."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from genus0.etaforms import eisenstein_series, normalized_weight2
from genus0.exactmath import QuadraticNumber, RationalFunction
from genus0.hauptmodul import hauptmodul_record, hauptmodul_series
from genus0.levels import psi
from genus0.ratrecover import default_precision, express_in_hauptmodul, recover_j


class SingularModelError(ArithmeticError):
    pass


@dataclass(frozen=True)
class IsogenousPairFunctions:
    """A4, A6 describe E and A4p, A6p describe E' (Weierstrass a4 = -A4/48, a6 = A6/864)."""
    level: int
    A4: RationalFunction
    A6: RationalFunction
    A4p: RationalFunction
    A6p: RationalFunction

    def as_dict(self) -> dict[str, RationalFunction]:
        return {"A4": self.A4, "A6": self.A6, "A4p": self.A4p, "A6p": self.A6p}

    def j_of_E(self) -> RationalFunction:
        return _j_from_A(self.A4, self.A6)

    def j_of_Ep(self) -> RationalFunction:
        return _j_from_A(self.A4p, self.A6p)


def _j_from_A(A4: RationalFunction, A6: RationalFunction) -> RationalFunction:
    c = A4**3
    disc = c - A6 * A6
    if disc == 0:
        raise SingularModelError("A4^3 = A6^2 identically")
    return c * 1728 / disc


def isogenous_pair_series(N: int, prec: int):
    """q-series of E4/l^2, E6/l^3, E4(q^N)/l^2, E6(q^N)/l^3 with l the weight-2 form."""
    lam = normalized_weight2(N, prec)
    e4 = eisenstein_series(4, prec)
    e6 = eisenstein_series(6, prec)
    e4N = e4.substitute_power(N).truncate(prec)
    e6N = e6.substitute_power(N).truncate(prec)
    l2 = lam * lam
    l3 = l2 * lam
    return e4 / l2, e6 / l3, e4N / l2, e6N / l3


@lru_cache(maxsize=None)
def isogenous_pair_coeffs(N: int, prec: int | None = None) -> IsogenousPairFunctions:
    prec = prec or default_precision(N)
    h = hauptmodul_series(N, prec)
    fs = [express_in_hauptmodul(s, h, level=N) for s in isogenous_pair_series(N, prec)]
    return IsogenousPairFunctions(N, *fs)


@dataclass(frozen=True)
class CmSpecialValue:
    level: int
    hValue: QuadraticNumber
    jValue: QuadraticNumber
    fixedTau: str


def cm_special_value(N: int) -> CmSpecialValue:
    """j at the Fricke fixed point i/sqrt(N), where h_N = +sqrt(kappa_N)."""
    rec = hauptmodul_record(N)
    h = rec.kappa_sqrt
    if complex(h).real <= 0:
        raise ArithmeticError("expected the positive square root of kappa")
    j = recover_j(N)(h)
    if not isinstance(j, QuadraticNumber):
        j = QuadraticNumber(j, 0, 1)
    return CmSpecialValue(N, h, j, "i/sqrt(N)")


# ---------------------------------------------------------------------------
# 2- and 3-isogeny descent models

def h2_from_two_isogeny_model(a2, a4) -> Fraction:
    """h_2 of the curve y^2 = x^3 + a2 x^2 + a4 x."""
    a2, a4 = Fraction(a2), Fraction(a4)
    den = a2 * a2 - 4 * a4
    if den == 0:
        raise SingularModelError("singular family: a2^2 = 4 a4")
    return 256 * a4 / den


def h3_from_three_isogeny_model(a, b, d) -> Fraction:
    """h_3 of the curve y^2 = x^3 + d (a x + b)^2."""
    a, b, d = Fraction(a), Fraction(b), Fraction(d)
    den = 4 * a**3 * d - 27 * b
    if den == 0:
        raise SingularModelError("singular family: 4 a^3 d = 27 b")
    return 729 * b / den


def model_j_invariants(kind: str, params) -> Fraction:
    if kind == "two":
        a2, a4 = (Fraction(x) for x in params)
        num = 256 * (a2 * a2 - 3 * a4) ** 3
        den = a2 * a2 * a4 * a4 - 4 * a4**3
    elif kind == "three":
        a, b, d = (Fraction(x) for x in params)
        num = 256 * (d * d * a**4 - 6 * d * a * b) ** 3
        den = 4 * d**3 * a**3 * b**3 - 27 * d * d * b**4
    else:
        raise ValueError(f"unknown model kind {kind!r}")
    if den == 0:
        raise SingularModelError(f"singular {kind}-isogeny model {tuple(params)}")
    return num / den


def tilde_models(kind: str, h) -> tuple[Fraction, ...]:
    """Parameters of the model attached to h.

    ``two`` gives (a2, a4) for y^2 = x^3 + a2 x^2 + a4 x.
    ``three`` gives (a, b, d) for y^2 = x^3 + d (a x + b)^2.
    """
    h = Fraction(h)
    if kind == "two":
        if h in (0, -64):
            raise SingularModelError(f"tilde E_2 is singular at h = {h}")
        a2 = 4 * h + 256
        return a2, h * a2
    if kind == "three":
        if h in (0, -27):
            raise SingularModelError(f"tilde E_3 is singular at h = {h}")
        a = 27 * h + 729
        return a, h * a * a, Fraction(1, 4)
    raise ValueError(f"unknown model kind {kind!r}")


def weierstrass_coefficients(kind: str, params) -> tuple[Fraction, ...]:
    """Long-form (a1, a2, a3, a4, a6) of a two- or three-isogeny model."""
    if kind == "two":
        a2, a4 = (Fraction(x) for x in params)
        return Fraction(0), a2, Fraction(0), a4, Fraction(0)
    if kind == "three":
        a, b, d = (Fraction(x) for x in params)
        return Fraction(0), d * a * a, Fraction(0), 2 * d * a * b, d * b * b
    raise ValueError(f"unknown model kind {kind!r}")


def j_from_ainvariants(a1, a2, a3, a4, a6):
    """j of the general Weierstrass equation via b- and c-invariants."""
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc == 0:
        raise SingularModelError("zero discriminant")
    return c4**3 / disc


def map_degree_ok(N: int) -> bool:
    return recover_j(N).degree == psi(N)
