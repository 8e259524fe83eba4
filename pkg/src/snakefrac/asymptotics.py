"""Limits of quotients in the once-punctured torus family.

The family ``ALT(i)`` is the straight snake graph with ``2i - 1`` tiles
labeled ``x1, x2, x1, ...``; ``e_0`` and every interior edge carry ``x3``,
and the side edges of a tile carry the label of the other tile kind.  Its
expansions ``u(i)`` are cluster variables, and the quotients ``u(i)/v(i)``
and ``u(i)/u(i-1)`` converge to the closed forms :func:`alpha` and
:func:`beta`.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from snakefrac.cf_core import continuant_ring
from snakefrac.gaussian import I, GaussianRational, is_zero, normalize
from snakefrac.identities import IdentityReport
from snakefrac.labeled import (
    LabeledSnakeGraph,
    gamma_prime,
    triangulated_labeling,
)
from snakefrac.laurent import LaurentPoly, VarSet
from snakefrac.matchings import weighted_matching_sum
from snakefrac.snake import NeChoice, cf_to_snake_with_edge, reflect, straight_shape
from snakefrac.surd import QuadraticSurd, sqrt_exact

LIMIT_GUARD = 60
TORUS_VARS = VarSet(("x1", "x2", "x3"))
VARIANTS = ("ALT", "SHIFT", "STAIR")


@dataclass(frozen=True)
class TorusFamilySpec:
    """``variant``: ``ALT`` reads ``[1,1,...]``, ``SHIFT`` reads ``[2,1,1,...]``
    (the same graph with the labels of ``e_0`` and ``b_0`` exchanged) and
    ``STAIR`` reads ``[2,2,...]``."""

    variant: str
    i: int

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.i < 1:
            raise ValueError("truncation index must be at least 1")


def _other(a: str, b: str) -> str:
    (third,) = {"x1", "x2", "x3"} - {a, b}
    return third


def torus_snake(spec: TorusFamilySpec) -> LabeledSnakeGraph:
    i = spec.i
    if spec.variant == "STAIR":
        return _stair_snake(i)
    d = 2 * i - 1
    tiles = ["x1" if j % 2 else "x2" for j in range(1, d + 1)]
    if spec.variant == "ALT":
        return triangulated_labeling(straight_shape(d), NeChoice.NORTH, tiles,
                                     ["x3"] * (d + 1), "x2", "x2", TORUS_VARS)
    return triangulated_labeling(reflect(straight_shape(d)), NeChoice.EAST, tiles,
                                 ["x2"] + ["x3"] * d, "x3", "x2", TORUS_VARS)


def _stair_snake(i: int) -> LabeledSnakeGraph:
    """``G[2,...,2]`` (``i`` entries) crossing ``x3, x1, x3, x2, ...``.

    The tile labels are those of the arc that crosses ``x1`` and ``x2``
    alternately after the flip of ``x3``; each interior edge is the third
    side of the triangle shared by its two tiles.
    """
    shape, ne = cf_to_snake_with_edge((2,) * i)
    d = shape.d
    cycle = ("x3", "x1", "x3", "x2")
    tiles = [cycle[(j - 1) % 4] for j in range(1, d + 1)]
    before, after = "x2", cycle[d % 4]
    interior = [_other(before, tiles[0])]
    interior += [_other(tiles[j], tiles[j + 1]) for j in range(d - 1)]
    interior.append(_other(tiles[-1], after))
    b0 = _other(tiles[0], interior[0])
    bn = after
    return triangulated_labeling(shape, ne, tiles, interior, b0, bn, TORUS_VARS)


def torus_L(k: int) -> LaurentPoly:
    """``(x3/x1)(x2/x1)^(k-1)`` for odd ``k``, ``(x3/x2)(x1/x2)^(k-1)`` for even ``k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    x1, x2, x3 = (LaurentPoly.var(TORUS_VARS, n) for n in TORUS_VARS.names)
    if k % 2:
        return x3 * x1 ** -1 * (x2 * x1 ** -1) ** (k - 1)
    return x3 * x2 ** -1 * (x1 * x2 ** -1) ** (k - 1)


# --- closed forms ------------------------------------------------------------

def _point(point: Sequence) -> tuple:
    if len(point) != 3:
        raise ValueError("a point needs three coordinates x1, x2, x3")
    pt = tuple(normalize(v) for v in point)
    if any(is_zero(v) for v in pt):
        raise ValueError("coordinates must be nonzero")
    return pt


def mutated_x1(point) -> object:
    x1, x2, x3 = _point(point)
    return normalize((x2 * x2 + x3 * x3) / _as_div(x1))


def _as_div(x):
    return Fraction(x) if isinstance(x, int) else x


def _radical(point) -> QuadraticSurd:
    x1, x2, x3 = _point(point)
    diff = mutated_x1(point) - x1
    return sqrt_exact(diff * diff + 4 * x3 * x3)


def alpha(point) -> QuadraticSurd:
    """``((x1' - x1) + sqrt((x1' - x1)^2 + 4 x3^2)) / (2 x3)``."""
    x1, x2, x3 = _point(point)
    return (QuadraticSurd(mutated_x1(point) - x1) + _radical(point)) / (2 * _as_div(x3))


def beta(point) -> QuadraticSurd:
    """``(x1' + x1 + sqrt((x1' - x1)^2 + 4 x3^2)) / (2 x2)``."""
    x1, x2, x3 = _point(point)
    return (QuadraticSurd(mutated_x1(point) + x1) + _radical(point)) / (2 * _as_div(x2))


def alpha_quadratic_residual(point) -> QuadraticSurd:
    """``x3 a^2 + (x1 - x1') a - x3`` at ``a = alpha(point)``; zero exactly."""
    x1, x2, x3 = _point(point)
    a = alpha(point)
    return x3 * a * a + (x1 - mutated_x1(point)) * a - x3


def beta_residual(point) -> QuadraticSurd:
    """``beta x2 - x3 alpha - x1``; zero exactly."""
    x1, x2, x3 = _point(point)
    return beta(point) * x2 - alpha(point) * x3 - x1


def periodic_cf_value(z) -> QuadraticSurd:
    """``(z + sqrt(z^2 + 4)) / 2``: ``[z, z, ...]`` for ``z > 0``, ``[0, -z, -z, ...]`` for ``z < 0``."""
    z = normalize(z)
    if is_zero(z):
        raise ValueError("z must be nonzero")
    return (QuadraticSurd(z) + sqrt_exact(z * z + 4)) / 2


def periodic_cf_surd(period: Sequence, preperiod: Sequence = ()) -> QuadraticSurd:
    """Value of ``[preperiod, period, period, ...]`` for a positive period.

    The purely periodic part ``x`` solves ``x = [period, x]``, i.e.
    ``Q x^2 + (Q' - P) x - P' = 0`` with continuants ``P = N[c_1..c_p]``,
    ``P' = N[c_1..c_{p-1}]``, ``Q = N[c_2..c_p]``, ``Q' = N[c_2..c_{p-1}]``.
    """
    period = [normalize(c) for c in period]
    if not period or any(c <= 0 for c in period):
        raise ValueError("the period must be nonempty and positive")
    P = continuant_ring(period)
    Pp = continuant_ring(period[:-1])
    Q = continuant_ring(period[1:])
    Qp = continuant_ring(period[1:-1]) if len(period) > 1 else 0
    b = Qp - P
    x = (QuadraticSurd(-b) + sqrt_exact(b * b + 4 * Q * Pp)) / (2 * Q)
    for c in reversed(list(preperiod)):
        x = QuadraticSurd(c) + x.inverse()
    return x


def mu3_point(point) -> tuple:
    """Replace ``x3`` by ``(x1^2 + x2^2) / x3``."""
    x1, x2, x3 = _point(point)
    return x1, x2, normalize((x1 * x1 + x2 * x2) / _as_div(x3))


def alpha_prime(point) -> QuadraticSurd:
    """Limit for the ``[2,2,...]`` family: ``alpha`` after the flip of ``x3``."""
    return alpha(mu3_point(point))


def kronecker_alpha(x1, x2) -> QuadraticSurd:
    """``((x1' - x1) + sqrt((x1' - x1)^2 + 4)) / 2`` with ``x1' = (x2^2 + 1)/x1``."""
    x1, x2 = normalize(x1), normalize(x2)
    diff = normalize((x2 * x2 + 1) / _as_div(x1) - x1)
    return (QuadraticSurd(diff) + sqrt_exact(diff * diff + 4)) / 2


def kronecker_beta(x1, x2) -> QuadraticSurd:
    x1, x2 = normalize(x1), normalize(x2)
    x1p = normalize((x2 * x2 + 1) / _as_div(x1))
    diff = x1p - x1
    return (QuadraticSurd(x1p + x1) + sqrt_exact(diff * diff + 4)) / (2 * _as_div(x2))


# --- finite quotients --------------------------------------------------------

def eval_expansion(g: LabeledSnakeGraph, point: dict):
    """Exact value of the expansion at ``point`` without expanding symbolically."""
    total = weighted_matching_sum(g.shape, g.ne, lambda e: point[g.weight_of(e)])
    den = 1
    for j in range(1, g.d + 1):
        den = den * point[g.tile_label[j]]
    return normalize(total * _reciprocal(den))


def _reciprocal(x):
    return x.inverse() if isinstance(x, GaussianRational) else Fraction(1) / x


def _point_map(point) -> dict:
    x1, x2, x3 = _point(point)
    return {"x1": x1, "x2": x2, "x3": x3}


@dataclass(frozen=True)
class LimitRow:
    i: int
    u_over_v: Fraction
    u_ratio: Optional[Fraction]


def limit_table(point, i_max: int, variant: str = "ALT") -> list:
    """Rows ``(i, u(i)/v(i), u(i)/u(i-1))`` for ``i = 1..i_max``, exact."""
    if i_max > LIMIT_GUARD:
        raise ValueError(f"i_max above the guard of {LIMIT_GUARD}")
    if i_max < 1:
        raise ValueError("i_max must be at least 1")
    pt = _point_map(point)
    rows, prev = [], None
    for i in range(1, i_max + 1):
        g = torus_snake(TorusFamilySpec(variant, i))
        u = eval_expansion(g, pt)
        v = eval_expansion(gamma_prime(g), pt)
        rows.append(LimitRow(i, normalize(Fraction(u) / Fraction(v)),
                             None if prev is None else normalize(Fraction(u) / Fraction(prev))))
        prev = u
    return rows


def to_decimal(q, digits: int = 40) -> Decimal:
    q = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = digits + 30
        return (Decimal(q.numerator) / Decimal(q.denominator)).quantize(Decimal(1).scaleb(-digits))


def distance(q, s: QuadraticSurd, digits: int = 40) -> Decimal:
    """``|q - s|`` for a rational ``q`` and a real surd, at ``digits`` places."""
    re_, im_ = s.to_decimal(digits)
    if im_ != 0:
        raise ValueError("distance to a non-real surd")
    return abs(to_decimal(q, digits) - re_)


# --- the metallic table ------------------------------------------------------

def _report(name: str, lhs: QuadraticSurd, rhs: QuadraticSurd, desc: str) -> IdentityReport:
    return IdentityReport(name, lhs, rhs, desc)


def metallic_checks(n_max: int = 10) -> list:
    """Exact surd checks of the closed-form table, rows a to g."""
    out = []
    for n in range(1, n_max + 1):
        base = (n, n + 1, 2 * n + 1)
        r = Fraction(2 * n + 1, n + 2)
        scaled = tuple(r * v for v in base)
        out.append(_report("a", alpha(scaled), alpha(base), f"alpha(r*p) = alpha(p), p={base}, r={r}"))
        out.append(_report("b", alpha((1, 1, n)), periodic_cf_value(n), f"alpha(1,1,{n}) = [{n} repeating]"))
        out.append(_report("b", periodic_cf_surd((n,)), periodic_cf_value(n),
                           f"[{n} repeating] = ({n}+sqrt({n * n + 4}))/2"))
        out.append(_report("c", alpha((1, n, 1)), periodic_cf_surd((n * n,)),
                           f"alpha(1,{n},1) = [{n * n} repeating]"))
        w = Fraction(n * n - 2, n)
        out.append(_report("d", alpha((n, 1, 1)), periodic_cf_value(w).inverse(),
                           f"alpha({n},1,1) = [0, {w} repeating]"))
        if n >= 2:
            out.append(_report("d", alpha((n, 1, 1)), periodic_cf_surd((n - 1, 1, n - 1), (0,)),
                               f"alpha({n},1,1) = [0, {n - 1},1,{n - 1} repeating]"))
        w = Fraction(2 * (n * n + n - 1), 2 * n + 1)
        out.append(_report("e", alpha((2 * n + 1, 1, 2)), periodic_cf_value(w).inverse(),
                           f"alpha({2 * n + 1},1,2) = [0, {w} repeating]"))
        out.append(_report("e", alpha((2 * n + 1, 1, 2)), periodic_cf_surd((n, 2, n), (0,)),
                           f"alpha({2 * n + 1},1,2) = [0, {n},2,{n} repeating]"))
    for s in (1, -1):
        sign = "+" if s > 0 else "-"
        out.append(_report("f", alpha((1, 1, s * 2 * I)), QuadraticSurd(s * I),
                           f"alpha(1,1,{sign}2i) = {sign}i"))
        out.append(_report("g", beta((1, 1, s * 2 * I)), QuadraticSurd(-1),
                           f"beta(1,1,{sign}2i) = -1"))
    return out
