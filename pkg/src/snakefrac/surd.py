"""Exact quadratic surds ``a + b*sqrt(D)`` with ``a, b`` in Q(i).

``D`` is a squarefree positive integer; when ``b == 0`` the radicand is
normalised to 1 so that equal numbers compare equal.  Surds with different
radicands can be combined only if one of them is rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt

from snakefrac.gaussian import (
    GaussianRational,
    format_gaussian,
    imag_part,
    is_zero,
    normalize,
    real_part,
)


class SurdError(ValueError):
    pass


def squarefree_split(n: int) -> tuple:
    """``n = s^2 * D`` with ``D`` squarefree; returns ``(s, D)`` for ``n > 0``."""
    if n <= 0:
        raise ValueError("need a positive integer")
    s, D = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            D *= p
        p += 1 if p == 2 else 2
    return s, D * n


@dataclass(frozen=True)
class QuadraticSurd:
    a: object = 0
    b: object = 0
    D: int = 1

    def __post_init__(self):
        a, b, D = normalize(self.a), normalize(self.b), int(self.D)
        if D < 1:
            raise SurdError("radicand must be a positive integer")
        s, D = squarefree_split(D)
        b = normalize(b * s)
        if D == 1:
            a, b = normalize(a + b), 0
        if is_zero(b):
            D = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", D)

    @staticmethod
    def coerce(x) -> "QuadraticSurd":
        if isinstance(x, QuadraticSurd):
            return x
        return QuadraticSurd(normalize(x), 0, 1)

    @property
    def is_rational(self) -> bool:
        return is_zero(self.b)

    def _radicand_with(self, other: "QuadraticSurd") -> int:
        if self.is_rational:
            return other.D
        if other.is_rational or other.D == self.D:
            return self.D
        raise SurdError(f"cannot combine sqrt({self.D}) with sqrt({other.D})")

    def __add__(self, other):
        o = QuadraticSurd.coerce(other)
        return QuadraticSurd(self.a + o.a, self.b + o.b, self._radicand_with(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.D)

    def __sub__(self, other):
        return self + (-QuadraticSurd.coerce(other))

    def __rsub__(self, other):
        return QuadraticSurd.coerce(other) - self

    def __mul__(self, other):
        o = QuadraticSurd.coerce(other)
        D = self._radicand_with(o)
        return QuadraticSurd(self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def conjugate_radical(self) -> "QuadraticSurd":
        """``a - b*sqrt(D)``."""
        return QuadraticSurd(self.a, -self.b, self.D)

    def inverse(self) -> "QuadraticSurd":
        n = normalize(self.a * self.a - self.b * self.b * self.D)
        if is_zero(n):
            raise ZeroDivisionError("surd division by zero")
        inv = 1 / GaussianRational.coerce(n) if isinstance(n, GaussianRational) else Fraction(1) / n
        return QuadraticSurd(self.a * inv, -self.b * inv, self.D)

    def __truediv__(self, other):
        return self * QuadraticSurd.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QuadraticSurd.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadraticSurd(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            o = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.D == o.D

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def is_zero(self) -> bool:
        return is_zero(self.a) and is_zero(self.b)

    # -- rendering ---------------------------------------------------------
    def to_decimal(self, digits: int = 40) -> tuple:
        """``(real, imag)`` as Decimals carrying ``digits`` places after the point."""
        with localcontext() as ctx:
            ctx.prec = digits + 30
            root = Decimal(self.D).sqrt()
            parts = []
            for pick in (real_part, imag_part):
                a, b = pick(self.a), pick(self.b)
                value = _dec(a) + _dec(b) * root
                parts.append(value.quantize(Decimal(1).scaleb(-digits)))
        return tuple(parts)

    def to_complex(self) -> complex:
        root = self.D ** 0.5
        return complex(float(real_part(self.a)) + float(real_part(self.b)) * root,
                       float(imag_part(self.a)) + float(imag_part(self.b)) * root)

    def render(self, digits: int = 40) -> str:
        re_, im_ = self.to_decimal(digits)
        if im_ == 0:
            return _plain(re_)
        sign = "-" if im_ < 0 else "+"
        return f"{_plain(re_)}{sign}{_plain(abs(im_))}i"

    def __str__(self):
        if self.is_rational:
            return format_gaussian(self.a)
        a = "" if is_zero(self.a) else _paren(self.a) + " + "
        b = "" if self.b == 1 else _paren(self.b) + "*"
        return f"{a}{b}sqrt({self.D})"


def _paren(x) -> str:
    text = format_gaussian(x)
    return f"({text})" if isinstance(x, GaussianRational) or "/" in text or text.startswith("-") else text


def _dec(q) -> Decimal:
    q = Fraction(q)
    return Decimal(q.numerator) / Decimal(q.denominator)


def _plain(d: Decimal) -> str:
    text = format(d, "f")
    return "0" + text[1:] if text.startswith("-") and set(text[1:]) <= set("0.") else text


def sqrt_exact(x) -> QuadraticSurd:
    """Principal square root inside the surd type.

    Positive rationals give ``s*sqrt(D)``.  Other Gaussian rationals are
    accepted only when they are squares in Q(i).
    """
    x = normalize(x)
    if not isinstance(x, GaussianRational) and x >= 0:
        q = Fraction(x)
        if q == 0:
            return QuadraticSurd(0)
        return QuadraticSurd(0, Fraction(1, q.denominator), q.numerator * q.denominator)
    root = gaussian_sqrt(x)
    if root is None:
        raise SurdError(f"{format_gaussian(x)} has no square root in Q(i)")
    return QuadraticSurd(root)


def _rational_sqrt(q: Fraction):
    q = Fraction(q)
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def gaussian_sqrt(x):
    """Square root in Q(i) with nonnegative real part (imag >= 0 on the axis), or None."""
    r, s = real_part(x), imag_part(x)
    modulus = _rational_sqrt(r * r + s * s)
    if modulus is None:
        return None
    re_ = _rational_sqrt((modulus + r) / 2)
    im_ = _rational_sqrt((modulus - r) / 2)
    if re_ is None or im_ is None:
        return None
    if s < 0:
        im_ = -im_
    return normalize(GaussianRational(re_, im_))
