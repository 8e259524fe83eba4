"""Exact continued fractions and continuants.

Positive continued fractions ``[a1, ..., an]`` (every ``ai >= 1``) are held in
:class:`ContinuedFraction`.  The continuant recurrence itself is generic and
works for any commutative ring whose elements support ``+`` and ``*`` with
plain ints (integers, ``Fraction``, Gaussian rationals, Laurent polynomials).

Continuant conventions: the empty sequence has continuant 1, and a sequence
"one shorter than empty" (e.g. ``a[n+2..n]``) has continuant 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from snakefrac.gaussian import is_zero, normalize

EMPTY_CONTINUANT = 1
BEFORE_EMPTY_CONTINUANT = 0


@dataclass(frozen=True)
class ContinuedFraction:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a continued fraction needs at least one coefficient")
        for a in coeffs:
            if not isinstance(a, int) or isinstance(a, bool):
                raise TypeError(f"coefficient {a!r} is not an integer")
            if a < 1:
                raise ValueError(f"coefficient {a} is not positive")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, coeffs: Union["ContinuedFraction", Iterable[int]]) -> "ContinuedFraction":
        return coeffs if isinstance(coeffs, cls) else cls(tuple(coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    @property
    def is_canonical(self) -> bool:
        """Last coefficient at least 2; ``[1]`` is never canonical."""
        return self.coeffs[-1] >= 2

    def tail(self) -> tuple:
        return self.coeffs[1:]

    def __str__(self):
        return format_cf(self)


CFLike = Union[ContinuedFraction, Sequence[int]]


def _coeffs(cf: CFLike) -> tuple:
    return ContinuedFraction.of(cf).coeffs


def continuant_ring(entries: Sequence, one=1, zero=0):
    """Continuant of an arbitrary sequence via the three-term recurrence.

    ``N[e1..en] = e1 * N[e2..en] + N[e3..en]`` with ``N[] = one`` and the
    before-empty value ``zero``.  No division is performed.
    """
    cur, nxt = one, zero
    for e in reversed(entries):
        cur, nxt = e * cur + nxt, cur
    return cur


def continuant(cf: CFLike) -> int:
    """Continuant (numerator) of a positive continued fraction."""
    return continuant_ring(_coeffs(cf))


def integer_continuant(seq: Sequence[int]) -> int:
    """Continuant of any integer sequence, zeros and the empty sequence allowed."""
    return continuant_ring(tuple(seq), EMPTY_CONTINUANT, BEFORE_EMPTY_CONTINUANT)


def evaluate(cf: CFLike) -> Fraction:
    coeffs = _coeffs(cf)
    num = continuant(coeffs)
    den = continuant_ring(coeffs[1:])
    return Fraction(num, den)


def convergent_pair(cf: CFLike) -> tuple[int, int]:
    """Unreduced (numerator, denominator) continuant pair; coprime by construction."""
    coeffs = _coeffs(cf)
    return continuant(coeffs), continuant_ring(coeffs[1:])


class ZeroDenominatorError(ZeroDivisionError):
    def __init__(self, depth: int):
        super().__init__(f"zero intermediate denominator at depth {depth}")
        self.depth = depth


def evaluate_general(entries: Sequence):
    """Nested evaluation ``e1 + 1/(e2 + 1/(...))`` from the innermost term out.

    Raises :class:`ZeroDenominatorError` (carrying the 1-based position of
    the vanishing tail) as soon as a tail value is zero.
    """
    if not entries:
        raise ValueError("empty continued fraction")
    value = entries[-1]
    for depth in range(len(entries) - 1, 0, -1):
        if is_zero(value):
            raise ZeroDenominatorError(depth + 1)
        value = entries[depth - 1] + _reciprocal(value)
    return normalize(value)


def _reciprocal(x):
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def from_rational(r) -> ContinuedFraction:
    """Euclidean algorithm for a rational ``r > 1``; the result is canonical."""
    r = Fraction(r)
    if r <= 1:
        raise ValueError(f"{r} is not greater than 1")
    p, q = r.numerator, r.denominator
    coeffs = []
    while q:
        a, rem = divmod(p, q)
        coeffs.append(a)
        p, q = q, rem
    cf = ContinuedFraction(tuple(coeffs))
    assert len(cf) == 1 or cf.coeffs[-1] >= 2
    return cf


def g_map(cf: CFLike) -> ContinuedFraction:
    """Fold a trailing 1 into its predecessor; fixes canonical fractions."""
    coeffs = _coeffs(cf)
    if coeffs == (1,):
        raise ValueError("g is not defined on [1]")
    if coeffs[-1] == 1:
        coeffs = coeffs[:-2] + (coeffs[-2] + 1,)
    return ContinuedFraction(coeffs)


def scale(entries: Sequence, r) -> list:
    """Return ``[r*a1, a2/r, r*a3, ...]``, whose value is ``r`` times the original."""
    if is_zero(r):
        raise ValueError("scaling factor must be nonzero")
    r_inv = _reciprocal(r)
    return [normalize(e * (r if k % 2 == 0 else r_inv)) for k, e in enumerate(entries)]


def reverse(cf: CFLike) -> ContinuedFraction:
    return ContinuedFraction(tuple(reversed(_coeffs(cf))))


def ell_positions(cf: CFLike) -> tuple:
    """Partial sums ``l_i = a_1 + ... + a_i``."""
    out, s = [], 0
    for a in _coeffs(cf):
        s += a
        out.append(s)
    return tuple(out)


def is_reduced(cf: CFLike) -> bool:
    num, den = convergent_pair(cf)
    return gcd(num, den) == 1


# --- text formats -----------------------------------------------------------

def parse_cf(text: str) -> ContinuedFraction:
    parts = [p.strip() for p in text.strip().strip("[]").split(",")]
    try:
        coeffs = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"not a continued fraction: {text!r}") from None
    return ContinuedFraction(coeffs)


def format_cf(cf: CFLike) -> str:
    return ",".join(str(a) for a in _coeffs(cf))


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    num, _, den = s.partition("/")
    try:
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational: {text!r}") from None
    return value


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"
