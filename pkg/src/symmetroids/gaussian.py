"""Exact Gaussian rationals: the field Q(i).

A value is stored as three integers ``(a, b, d)`` meaning ``(a + b*i) / d``
with ``d > 0`` and ``gcd(a, b, d) == 1``.  Keeping a single common
denominator makes multiplication cost one gcd instead of two.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

__all__ = ["GaussianRational", "G", "I", "ZERO", "ONE", "parse_gaussian"]


class GaussianRational:
    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _make(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, int):
            return cls._make(value, 0, 1)
        if isinstance(value, Rational):
            return cls._make(value.numerator, 0, value.denominator)
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, str):
            return parse_gaussian(value)
        raise TypeError(f"cannot coerce {value!r} to GaussianRational")

    # -- accessors -------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def conj(self) -> "GaussianRational":
        return GaussianRational._make(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """|z|^2 as a rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return GaussianRational._make(self._a + other._a, self._b + other._b, d1)
        return GaussianRational._make(
            self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(GaussianRational)
        obj._a, obj._b, obj._d = -self._a, -self._b, self._d
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if b1 == 0 and b2 == 0:
            return GaussianRational._make(a1 * a2, 0, self._d * other._d)
        return GaussianRational._make(
            a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * other._d
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational._make(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sqrt(self) -> "GaussianRational | None":
        """A square root in Q(i), or None if there is none.

        If (x + y i)^2 = a + b i then x^2 + y^2 = |a + b i| must be rational,
        and x^2, y^2 = (|z| +- a) / 2 must be squares of rationals.
        """
        a, b = self.re, self.im
        r = _rational_sqrt(a * a + b * b)
        if r is None:
            return None
        x = _rational_sqrt((r + a) / 2)
        y = _rational_sqrt((r - a) / 2)
        if x is None or y is None:
            return None
        return GaussianRational(x, y if b >= 0 else -y)

    # -- comparison / hashing -------------------------------------------

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self == other

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def sign(self) -> int:
        """Sign of a real value; raises for non-real input."""
        if self._b != 0:
            raise ValueError(f"{self} is not real")
        return (self._a > 0) - (self._a < 0)

    # -- text ------------------------------------------------------------

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        return format_gaussian(self)

    def __complex__(self):
        return complex(self._a / self._d, self._b / self._d)


G = GaussianRational.coerce
ZERO = GaussianRational._make(0, 0, 1)
ONE = GaussianRational._make(1, 0, 1)
I = GaussianRational._make(0, 1, 1)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n != q.numerator or d * d != q.denominator:
        return None
    return Fraction(n, d)


def _fmt_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    """Canonical text: ``3/2``, ``-5/7*I``, ``I``, ``1/2+1/3*I``, ``2-I``."""
    re, im = z.re, z.im
    if im == 0:
        return _fmt_rational(re)
    if im == 1:
        imag = "I"
    elif im == -1:
        imag = "-I"
    else:
        imag = _fmt_rational(im) + "*I"
    if re == 0:
        return imag
    if imag.startswith("-"):
        return f"{_fmt_rational(re)}{imag}"
    return f"{_fmt_rational(re)}+{imag}"


_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?=$|\s*[+-]))?\s*"
    rf"(?:(?P<im>[+-]?\s*(?:\d+(?:/\d+)?\s*\*\s*)?)I)?\s*$"
)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``a/b``, ``c/d*I`` or ``a/b+c/d*I`` (also bare ``I``, ``-I``)."""
    s = text.strip()
    m = _GAUSS_RE.match(s)
    if not s or m is None or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"not a Gaussian rational: {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    im_txt = m.group("im")
    if im_txt is not None:
        im_txt = im_txt.replace(" ", "").rstrip("*")
        if im_txt in ("", "+"):
            im_part = Fraction(1)
        elif im_txt == "-":
            im_part = Fraction(-1)
        else:
            im_part = Fraction(im_txt)
    return GaussianRational(re_part, im_part)
