"""Exact arithmetic for the two graph families.

``Q5`` and ``Q33`` are the real quadratic fields Q(sqrt 5) and Q(sqrt 33);
``HexC`` is the complex ring Q[i sqrt3, i sqrt11] with basis
(1, i sqrt3, i sqrt11, sqrt33).  Equality is always decided exactly here.
``Interval`` is a dyadic, outward-rounded enclosure used only to certify
strict inequalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

DEFAULT_PRECISION = 128
MAX_PRECISION = 4096


class CannotSeparate(ArithmeticError):
    """Raised when interval refinement up to MAX_PRECISION cannot decide a sign."""


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not a rational: {x!r}")


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def _sqrt_sign(a: Fraction, b: Fraction, radicand: int) -> int:
    """Sign of a + b*sqrt(radicand), radicand a positive non-square."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with radicand*b^2
    lhs = a * a
    rhs = radicand * b * b
    return sa if lhs > rhs else sb


class _RealQuadratic:
    """Shared arithmetic for a + b*sqrt(D)."""

    __slots__ = ()
    D: int

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0):
        object.__setattr__(self, "a", _q(a))
        object.__setattr__(self, "b", _q(b))

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def __repr__(self):
        return f"{type(self).__name__}({self.a}, {self.b})"

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if type(other) is not type(self):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((type(self).__name__, self.a, self.b))

    def _coerce(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)(other, 0)
        raise TypeError(
            f"cannot mix {type(self).__name__} with {type(other).__name__}"
        )

    def __add__(self, other):
        o = self._coerce(other)
        return type(self)(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return type(self)(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return type(self)(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        return type(self)(
            self.a * o.a + self.D * self.b * o.b, self.a * o.b + self.b * o.a
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm a^2 - D b^2."""
        return self.a * self.a - self.D * self.b * self.b

    def conjugate(self):
        return type(self)(self.a, -self.b)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self!r} is not invertible")
        return type(self)(self.a / n, -self.b / n)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = type(self)(1, 0)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def sign(self) -> int:
        return _sqrt_sign(self.a, self.b, self.D)

    def _cmp(self, other) -> int:
        return (self - self._coerce(other)).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_json(self) -> list[str]:
        return [format_rational(self.a), format_rational(self.b)]

    @classmethod
    def from_json(cls, data):
        a, b = data
        return cls(parse_rational(a), parse_rational(b))

    def approx(self, precision: int = DEFAULT_PRECISION) -> "Interval":
        return Interval.from_rational(self.a, precision) + Interval.from_rational(
            self.b, precision
        ) * Interval.sqrt_int(self.D, precision)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)


class Q5(_RealQuadratic):
    """a + b*sqrt(5)."""

    __slots__ = ("a", "b")
    D = 5


class Q33(_RealQuadratic):
    """a + d*sqrt(33); the real subring where hexagon-family norms live."""

    __slots__ = ("a", "b")
    D = 33

    @property
    def d(self) -> Fraction:
        return self.b


def q5_sign(x: Q5) -> int:
    return x.sign()


def q33_sign(x: Q33) -> int:
    return x.sign()


@dataclass(frozen=True, order=True)
class HexC:
    """a + b*i*sqrt3 + c*i*sqrt11 + d*sqrt33."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "abcd":
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, _q(v))

    @staticmethod
    def _coerce(other) -> "HexC":
        if isinstance(other, HexC):
            return other
        if isinstance(other, (int, Fraction)):
            return HexC(_q(other))
        raise TypeError(f"cannot mix HexC with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return HexC(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return HexC(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return HexC(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        # (i√3)²=-3, (i√11)²=-11, (√33)²=33, (i√3)(i√11)=-√33,
        # (i√3)(√33)=3i√11, (i√11)(√33)=11i√3
        return HexC(
            a1 * a2 - 3 * b1 * b2 - 11 * c1 * c2 + 33 * d1 * d2,
            a1 * b2 + b1 * a2 + 11 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 3 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 - (b1 * c2 + c1 * b2),
        )

    __rmul__ = __mul__

    def conj(self) -> "HexC":
        return HexC(self.a, -self.b, -self.c, self.d)

    def norm_sq(self) -> Q33:
        a, b, c, d = self.a, self.b, self.c, self.d
        return Q33(a * a + 3 * b * b + 11 * c * c + 33 * d * d, 2 * (a * d + b * c))

    def inverse(self) -> "HexC":
        # z^-1 = conj(z) / |z|^2, and 1/|z|^2 lies in Q33 ⊂ HexC
        n = self.norm_sq().inverse()
        return self.conj() * HexC(n.a, 0, 0, n.b)

    def __pow__(self, e: int) -> "HexC":
        if e < 0:
            return self.inverse() ** (-e)
        out = HexC(Fraction(1))
        for _ in range(e):
            out = out * self
        return out

    def real(self) -> Q33:
        return Q33(self.a, self.d)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def to_json(self) -> list[str]:
        return [format_rational(v) for v in (self.a, self.b, self.c, self.d)]

    @classmethod
    def from_json(cls, data) -> "HexC":
        return cls(*(parse_rational(v) for v in data))

    def approx(self, precision: int = DEFAULT_PRECISION) -> tuple["Interval", "Interval"]:
        """(real part, imaginary part) enclosures."""
        re = Interval.from_rational(self.a, precision) + Interval.from_rational(
            self.d, precision
        ) * Interval.sqrt_int(33, precision)
        im = Interval.from_rational(self.b, precision) * Interval.sqrt_int(
            3, precision
        ) + Interval.from_rational(self.c, precision) * Interval.sqrt_int(11, precision)
        return re, im


def hexc_mul(x: HexC, y: HexC) -> HexC:
    return x * y


def hexc_conj(x: HexC) -> HexC:
    return x.conj()


def hexc_norm_sq(x: HexC) -> Q33:
    return x.norm_sq()


# ---------------------------------------------------------------------------
# intervals


def _floor_div(n: int, shift: int) -> int:
    return n >> shift if shift >= 0 else n << -shift


def _ceil_div(n: int, shift: int) -> int:
    return -((-n) >> shift) if shift >= 0 else n << -shift


class Interval:
    """Closed interval [lo_m / 2^p, hi_m / 2^p] with integer mantissas.

    Every operation rounds the lower end down and the upper end up, so the
    true value is always enclosed.
    """

    __slots__ = ("lo_m", "hi_m", "precision")

    def __init__(self, lo_m: int, hi_m: int, precision: int):
        if lo_m > hi_m:
            raise ValueError("empty interval")
        self.lo_m = lo_m
        self.hi_m = hi_m
        self.precision = precision

    @classmethod
    def from_rational(cls, x: RationalLike, precision: int = DEFAULT_PRECISION) -> "Interval":
        x = _q(x)
        scaled = x.numerator << precision
        lo = scaled // x.denominator
        hi = -((-scaled) // x.denominator)
        return cls(lo, hi, precision)

    @classmethod
    def sqrt_int(cls, n: int, precision: int = DEFAULT_PRECISION) -> "Interval":
        r = math.isqrt(n << (2 * precision))
        hi = r if r * r == n << (2 * precision) else r + 1
        return cls(r, hi, precision)

    @property
    def lo(self) -> Fraction:
        return Fraction(self.lo_m, 1 << self.precision)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.hi_m, 1 << self.precision)

    @property
    def width(self) -> Fraction:
        return Fraction(self.hi_m - self.lo_m, 1 << self.precision)

    def midpoint(self) -> float:
        return float(Fraction(self.lo_m + self.hi_m, 2 << self.precision))

    def __repr__(self):
        return f"Interval([{float(self.lo)!r}, {float(self.hi)!r}], {self.precision} bits)"

    def contains(self, x) -> bool:
        if isinstance(x, _RealQuadratic):
            # exact containment test via signs
            return (x - self.lo).sign() >= 0 and (x - self.hi).sign() <= 0
        x = _q(x)
        return self.lo <= x <= self.hi

    def _align(self, other):
        if isinstance(other, Interval):
            if other.precision != self.precision:
                raise ValueError("precision mismatch")
            return other
        return Interval.from_rational(other, self.precision)

    def __add__(self, other):
        o = self._align(other)
        return Interval(self.lo_m + o.lo_m, self.hi_m + o.hi_m, self.precision)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._align(other)
        return Interval(self.lo_m - o.hi_m, self.hi_m - o.lo_m, self.precision)

    def __rsub__(self, other):
        return self._align(other) - self

    def __neg__(self):
        return Interval(-self.hi_m, -self.lo_m, self.precision)

    def __mul__(self, other):
        o = self._align(other)
        p = self.precision
        prods = (
            self.lo_m * o.lo_m,
            self.lo_m * o.hi_m,
            self.hi_m * o.lo_m,
            self.hi_m * o.hi_m,
        )
        return Interval(_floor_div(min(prods), p), _ceil_div(max(prods), p), p)

    __rmul__ = __mul__

    def square(self) -> "Interval":
        p = self.precision
        if self.lo_m >= 0:
            lo, hi = self.lo_m * self.lo_m, self.hi_m * self.hi_m
        elif self.hi_m <= 0:
            lo, hi = self.hi_m * self.hi_m, self.lo_m * self.lo_m
        else:
            lo, hi = 0, max(self.lo_m * self.lo_m, self.hi_m * self.hi_m)
        return Interval(_floor_div(lo, p), _ceil_div(hi, p), p)

    def sign(self) -> int | None:
        """+1 / -1 if the interval excludes zero, else None."""
        if self.lo_m > 0:
            return 1
        if self.hi_m < 0:
            return -1
        return None


def interval_sqrt(x: Interval) -> Interval:
    if x.lo_m < 0:
        raise ValueError("interval_sqrt: negative lower bound")
    p = x.precision
    # sqrt(m / 2^p) = sqrt(m * 2^p) / 2^p
    lo = math.isqrt(x.lo_m << p)
    t = x.hi_m << p
    hi = math.isqrt(t)
    if hi * hi != t:
        hi += 1
    return Interval(lo, hi, p)


def approx(x, precision_bits: int = DEFAULT_PRECISION):
    """Enclosure of a rational, Q5 or Q33 value; a (re, im) pair for HexC."""
    if precision_bits < 8:
        raise ValueError("precision_bits must be >= 8")
    if isinstance(x, (int, Fraction)):
        return Interval.from_rational(x, precision_bits)
    return x.approx(precision_bits)


def certified_sign(
    evaluate: Callable[[int], Interval],
    precision: int = DEFAULT_PRECISION,
    max_precision: int = MAX_PRECISION,
) -> int:
    """Sign of a real quantity given an enclosure function of the precision.

    Doubles the precision until the enclosure excludes zero.  Never returns 0:
    a quantity that is exactly zero raises ``CannotSeparate``.
    """
    p = precision
    while p <= max_precision:
        s = evaluate(p).sign()
        if s is not None:
            return s
        p *= 2
    raise CannotSeparate(f"could not separate from zero at {max_precision} bits")
