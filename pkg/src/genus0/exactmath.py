"""Exact rational, polynomial and quadratic-field arithmetic.

Everything here is float-free. ``Rational`` is :class:`fractions.Fraction`;
the polynomial and quadratic-number types are small immutable value classes.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, gcd, isqrt
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


# ---------------------------------------------------------------------------
# elementary number theory

def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("divisors need n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def divisor_sum(n: int, k: int) -> int:
    """sigma_k(n), the sum of k-th powers of the positive divisors of n."""
    if n < 1:
        raise ValueError("divisor_sum needs n >= 1")
    return sum(d**k for d in divisors(n))


def legendre_symbol(a: int, p: int) -> int:
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre_symbol needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=None)
def _bernoulli_all(m: int) -> Fraction:
    # B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, with B_1 = -1/2
    if m == 0:
        return Fraction(1)
    acc = sum(comb(m + 1, j) * _bernoulli_all(j) for j in range(m))
    return -acc / (m + 1)


def bernoulli(k: int) -> Fraction:
    if k < 2 or k % 2:
        raise ValueError(f"bernoulli is defined here for even k >= 2, got {k}")
    for m in range(k):  # fill the cache bottom-up, keeps recursion shallow
        _bernoulli_all(m)
    return _bernoulli_all(k)


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` squarefree (sign kept on d)."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    s, d = 1, (1 if n > 0 else -1)
    for p, e in factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


def rational_sqrt(x: Number) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


def is_rational_square(x: Number) -> bool:
    return rational_sqrt(x) is not None


# ---------------------------------------------------------------------------
# linear algebra

def nullspace(matrix: Sequence[Sequence[Number]]) -> list[list[int]]:
    """Right kernel basis of a rational matrix via exact Gaussian elimination.

    Each basis vector is scaled to coprime integers whose first nonzero entry
    is positive.
    """
    if not matrix:
        raise ValueError("nullspace needs at least one row")
    ncols = len(matrix[0])
    rows = [[Fraction(x) for x in row] for row in matrix]
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix is not rectangular")

    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break

    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(_primitive_integer_vector(v))
    return basis


def _primitive_integer_vector(v: Sequence[Fraction]) -> list[int]:
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0) or 1
    ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def mat_vec(matrix: Sequence[Sequence[Number]], v: Sequence[Number]) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in matrix]


# ---------------------------------------------------------------------------
# polynomials

class IntPolynomial:
    """Univariate polynomial with integer coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, deg: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * deg + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPolynomial":
        c = self.content()
        if c == 0:
            return self
        if self.leading < 0:
            c = -c
        return IntPolynomial(x // c for x in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_polynomial(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        out, base = IntPolynomial([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, int) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_rational(self, other: "IntPolynomial") -> tuple[list[Fraction], list[Fraction]]:
        """Long division over Q; returns (quotient, remainder) coefficient lists."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = other.degree
        lead = Fraction(other.leading)
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            if rem[k] == 0:
                continue
            f = rem[k] / lead
            quot[k - dq] = f
            for i, c in enumerate(other.coeffs):
                rem[k - dq + i] -= f * c
        rem = rem[:dq]
        while rem and rem[-1] == 0:
            rem.pop()
        return quot, rem

    def divides(self, other: "IntPolynomial") -> bool:
        """True iff ``self`` divides ``other`` in Q[x]."""
        _, r = other.divmod_rational(self)
        return not r

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod_rational(other)
        if r or any(c.denominator != 1 for c in q):
            raise ArithmeticError("inexact integer polynomial division")
        return IntPolynomial(int(c) for c in q)

    def shift_reverse(self, n: int) -> "IntPolynomial":
        """x**n * p(1/x) for n >= degree."""
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        cs = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return IntPolynomial(reversed(cs))


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    if isinstance(x, (list, tuple)):
        return IntPolynomial(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to IntPolynomial")


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q (sign-normalized), via the primitive PRS."""
    a, b = a.primitive(), b.primitive()
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        # pseudo-remainder: lead(b)^(da-db+1) * a mod b stays integral
        k = a.degree - b.degree + 1
        scaled = a * (b.leading**k)
        q, r = scaled.divmod_rational(b)
        rem = IntPolynomial(int(c) for c in r)
        a, b = b, rem.primitive()
    return a.primitive()


def format_polynomial(coeffs: Sequence[Number], var: str = "h") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class RationalFunction:
    """num/den in canonical form: coprime, joint content 1, den leading > 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = IntPolynomial(), IntPolynomial([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = _div_by(num, g)
                den = _div_by(den, g)
            c = gcd(num.content(), den.content())
            if den.leading < 0:
                c = -c
            num = IntPolynomial(x // c for x in num.coeffs)
            den = IntPolynomial(x // c for x in den.coeffs)
        self.num, self.den = num, den

    @classmethod
    def from_rational_coeffs(cls, num: Sequence[Number], den: Sequence[Number]) -> "RationalFunction":
        fs = [Fraction(x) for x in list(num) + list(den)]
        m = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fs), 1)
        return cls(IntPolynomial(int(Fraction(x) * m) for x in num),
                   IntPolynomial(int(Fraction(x) * m) for x in den))

    @classmethod
    def constant(cls, c: Number) -> "RationalFunction":
        c = Fraction(c)
        return cls(IntPolynomial([c.numerator]), IntPolynomial([c.denominator]))

    @classmethod
    def identity(cls) -> "RationalFunction":
        return cls(IntPolynomial([0, 1]), IntPolynomial([1]))

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        if self.den == IntPolynomial([1]):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other)
        if isinstance(other, IntPolynomial):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(self.den**(-e), self.num**(-e))
        return RationalFunction(self.num**e, self.den**e)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        n = self.num(x)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d

    def compose(self, inner: "RationalFunction") -> "RationalFunction":
        """self(inner) computed by homogenizing with inner's denominator."""
        d = self.degree
        pn, pd = inner.num, inner.den
        powers_n = [IntPolynomial([1])]
        powers_d = [IntPolynomial([1])]
        for _ in range(d):
            powers_n.append(powers_n[-1] * pn)
            powers_d.append(powers_d[-1] * pd)

        def hom(p: IntPolynomial) -> IntPolynomial:
            acc = IntPolynomial()
            for i, c in enumerate(p.coeffs):
                if c:
                    acc = acc + powers_n[i] * powers_d[d - i] * c
            return acc

        return RationalFunction(hom(self.num), hom(self.den))

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num.coeffs],
                "den": [str(c) for c in self.den.coeffs]}


def _div_by(p: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    # g is primitive and divides p over Q, so by Gauss the quotient is integral
    q, r = p.divmod_rational(g)
    assert not r
    return IntPolynomial(int(c) for c in q)


# ---------------------------------------------------------------------------
# quadratic fields

class QuadraticNumber:
    """a + b*sqrt(d) with rational a, b and squarefree d.

    Rational values are stored with b == 0; their radicand is kept only as a
    hint for the field they live in and does not affect equality.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Number = 0, b: Number = 0, d: int = 1):
        a, b, d = Fraction(a), Fraction(b), int(d)
        if d == 0:
            raise ValueError("radicand must be nonzero")
        s, d0 = squarefree_decomposition(d)
        b *= s
        if d0 == 1:
            a, b = a + b, Fraction(0)
        self.a, self.b, self.d = a, b, d0

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def _coerce(self, other) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            if other.b and self.b and other.d != self.d:
                raise ValueError(f"mixing Q(sqrt({self.d})) and Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.d)
        return NotImplemented

    def _field(self, other: "QuadraticNumber") -> int:
        return self.d if self.b else other.d

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadraticNumber):
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return self.a == other.a
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        b = self.b
        bpart = root if b == 1 else (f"-{root}" if b == -1 else f"{b}*{root}")
        if self.a == 0:
            return bpart
        if b < 0:
            babs = -b
            bpart = root if babs == 1 else f"{babs}*{root}"
            return f"{self.a} - {bpart}"
        return f"{self.a} + {bpart}"

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._field(o)
        return QuadraticNumber(self.a * o.a + self.b * o.b * d,
                               self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> "QuadraticNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        return QuadraticNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = QuadraticNumber(1, 0, self.d), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __complex__(self):
        from cmath import sqrt
        return complex(float(self.a) + float(self.b) * sqrt(self.d))

    def sqrt(self) -> "QuadraticNumber | None":
        """A square root inside the same field Q(sqrt(d)), or None."""
        x, y, d = self.a, self.b, self.d
        if x == 0 and y == 0:
            return QuadraticNumber(0, 0, d)
        if y == 0:
            r = rational_sqrt(x)
            if r is not None:
                return QuadraticNumber(r, 0, d)
            if d != 1:
                r = rational_sqrt(x / d)
                if r is not None:
                    return QuadraticNumber(0, r, d)
            return None
        # (p + r sqrt d)^2 = x + y sqrt d  =>  p^2 + d r^2 = x, 2pr = y
        n = rational_sqrt(self.norm())
        if n is None:
            return None
        for cand in ((x + n) / 2, (x - n) / 2):
            p = rational_sqrt(cand)
            if p is not None and p != 0:
                r = y / (2 * p)
                root = QuadraticNumber(p, r, d)
                if root * root == self:
                    return root
        return None

    def is_square(self) -> bool:
        return self.sqrt() is not None

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "d": self.d}


def quad_norm(x: QuadraticNumber) -> Fraction:
    return x.norm()


def quad_sqrt_of_rational(x: Number) -> QuadraticNumber:
    """Positive square root of a positive rational as an element of Q(sqrt(core))."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("need a positive rational")
    sn, dn = squarefree_decomposition(x.numerator * x.denominator)
    # sqrt(n/m) = sqrt(n*m)/m
    return QuadraticNumber(0, Fraction(sn, x.denominator), dn)
