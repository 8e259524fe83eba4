"""Exact Gaussian rationals, i.e. elements of Q(i).

Real values are kept as plain ``int``/``Fraction`` wherever possible; a
``GaussianRational`` only appears once an imaginary part is nonzero.  Use
:func:`normalize` to collapse results back to the real fast path.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Number = Union[int, Fraction, "GaussianRational"]


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, Rational):
            return GaussianRational(Fraction(x), Fraction(0))
        raise TypeError(f"cannot coerce {type(x).__name__} to a Gaussian rational")

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return normalize(GaussianRational(self.re + o.re, self.im + o.im))

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return normalize(GaussianRational(self.re - o.re, self.im - o.im))

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return normalize(GaussianRational(o.re - self.re, o.im - self.im))

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return normalize(GaussianRational(self.re * o.re - self.im * o.im,
                                          self.re * o.im + self.im * o.re))

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return normalize(GaussianRational(self.re / n, -self.im / n))

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational.coerce(self.inverse()) ** (-k)
        result: Number = 1
        base: Number = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return format_gaussian(self)

    def __repr__(self):
        return f"GaussianRational({format_gaussian(self)!r})"


I = GaussianRational(Fraction(0), Fraction(1))


def normalize(x) -> Number:
    """Collapse to ``int`` or ``Fraction`` when the value is real."""
    if isinstance(x, GaussianRational):
        if x.im != 0:
            return x
        x = x.re
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def real_part(x) -> Fraction:
    return x.re if isinstance(x, GaussianRational) else Fraction(x)


def imag_part(x) -> Fraction:
    return x.im if isinstance(x, GaussianRational) else Fraction(0)


def is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, GaussianRational) else x == 0


def _format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gaussian(x) -> str:
    """Render as ``a/b+c/di``; zero parts are omitted, ``1i`` prints as ``i``."""
    re_, im_ = real_part(x), imag_part(x)
    if im_ == 0:
        return _format_rational(re_)
    if abs(im_) == 1:
        im_text = "i"
    else:
        im_text = _format_rational(abs(im_)) + "i"
    sign = "-" if im_ < 0 else "+"
    if re_ == 0:
        return ("-" if im_ < 0 else "") + im_text
    return _format_rational(re_) + sign + im_text


_RAT = r"\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^(?P<re>[+-]?{_RAT}(?![\d/]*i))?(?:(?P<isign>[+-])?(?P<im>{_RAT})?i)?$"
)


def parse_gaussian(text: str) -> Number:
    """Parse ``a/b+c/di`` (either part may be omitted) into an exact value."""
    s = text.strip().replace(" ", "")
    m = _GAUSS_RE.match(s)
    if not s or m is None or (m.group("re") is None and not s.endswith("i")):
        raise ValueError(f"not a Gaussian rational: {text!r}")
    re_ = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_ = Fraction(0)
    if s.endswith("i"):
        im_ = Fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("isign") == "-":
            im_ = -im_
        elif m.group("isign") is None and m.group("re") is not None:
            raise ValueError(f"not a Gaussian rational: {text!r}")
    return normalize(GaussianRational(re_, im_))
