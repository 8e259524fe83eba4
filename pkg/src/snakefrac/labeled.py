"""Labeled snake graphs, their Laurent expansions and the entries ``L_i``.

A :class:`LabeledSnakeGraph` attaches a variable name to every edge and every
tile of a shape.  Its expansion is the sum over perfect matchings of the
product of edge weights, divided by the product of tile labels.  The chosen
north-east edge ``ne`` fixes which continued fraction the graph is read as;
changing it keeps every weight and only changes the reading.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Optional, Sequence

from snakefrac.cf_core import ContinuedFraction, continuant_ring, ell_positions
from snakefrac.gaussian import is_zero, normalize, real_part, imag_part
from snakefrac.laurent import LaurentPoly, RationalFunction, VarSet, frac_eq
from snakefrac.matchings import (
    E0,
    EdgeId,
    canonical_edge,
    edges_of,
    enumerate_matchings,
    interior_edge,
    parse_edge,
    weighted_matching_sum,
)
from snakefrac.snake import (
    RIGHT,
    UP,
    NeChoice,
    SnakeShape,
    cf_to_snake_with_edge,
    format_shape,
    parse_shape,
    snake_to_cf,
    sub_shape,
)

_MIRROR_SIDE = {"S": "W", "W": "S", "N": "E", "E": "N"}


class LabelConditionError(ValueError):
    """The straight-triple label condition needed for the ``L_i`` fails."""


def natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


@dataclass(frozen=True)
class BoundaryData:
    b0: str
    bn: str
    inner: tuple  # b_1 .. b_{n-1}

    def b(self, k: int) -> str:
        n = len(self.inner) + 1
        if k == 0:
            return self.b0
        if k == n:
            return self.bn
        return self.inner[k - 1]


@dataclass(eq=False)
class LabeledSnakeGraph:
    shape: SnakeShape
    ne: Optional[NeChoice]
    edge_weight: dict
    tile_label: dict
    varset: VarSet = None

    def __post_init__(self):
        weights = {}
        for e, name in self.edge_weight.items():
            c = canonical_edge(self.shape, e)
            if c in weights and weights[c] != name:
                raise ValueError(f"edge {c} given two weights: {weights[c]} and {name}")
            weights[c] = name
        missing = [str(e) for e in edges_of(self.shape) if e not in weights]
        if missing:
            raise ValueError(f"edges without a weight: {' '.join(missing)}")
        extra = set(self.tile_label) - set(range(1, self.shape.d + 1))
        if extra or len(self.tile_label) != self.shape.d:
            raise ValueError("every tile 1..d needs exactly one label")
        if self.shape.d > 0 and self.ne is None:
            raise ValueError("a graph with tiles needs a north-east choice")
        self.edge_weight = weights
        names = set(weights.values()) | set(self.tile_label.values())
        if self.varset is None:
            self.varset = VarSet(tuple(sorted(names, key=natural_key)))
        elif not names <= set(self.varset.names):
            raise ValueError(f"labels {sorted(names - set(self.varset.names))} not in the variable set")

    # -- reading -----------------------------------------------------------
    @property
    def d(self) -> int:
        return self.shape.d

    def cf(self) -> ContinuedFraction:
        if self.d == 0:
            return ContinuedFraction((1,))
        return snake_to_cf(self.shape, self.ne)

    def ells(self) -> tuple:
        return ell_positions(self.cf())

    def weight_of(self, edge: EdgeId) -> str:
        return self.edge_weight[canonical_edge(self.shape, edge)]

    def e(self, j: int) -> str:
        """Weight of the interior edge ``e_j`` (``e_d`` per the reading)."""
        return self.edge_weight[interior_edge(self.shape, j, self.ne)]

    def var(self, name: str) -> LaurentPoly:
        return LaurentPoly.var(self.varset, name)

    def with_ne(self, ne: NeChoice) -> "LabeledSnakeGraph":
        return LabeledSnakeGraph(self.shape, ne, dict(self.edge_weight), dict(self.tile_label),
                                 self.varset)

    def boundary(self) -> BoundaryData:
        return boundary_data(self)

    def __str__(self):
        return format_labeled(self)


def boundary_data(g: LabeledSnakeGraph) -> BoundaryData:
    if g.d == 0:
        w = g.edge_weight[E0]
        return BoundaryData(w, w, ())
    other_ne = "E" if g.ne is NeChoice.NORTH else "N"
    b0 = g.weight_of(EdgeId(1, "W"))
    bn = g.weight_of(EdgeId(g.d, other_ne))
    ell = g.ells()
    inner = tuple(g.tile_label[ell[k]] for k in range(len(ell) - 1))
    return BoundaryData(b0, bn, inner)


# --- construction -----------------------------------------------------------

def _entry_side(shape: SnakeShape, j: int, ne) -> str:
    return "S" if shape.direction(j - 1, ne) == UP else "W"


def _exit_side(shape: SnakeShape, j: int, ne) -> str:
    return "N" if shape.direction(j, ne) == UP else "E"


def triangulated_labeling(shape: SnakeShape, ne: NeChoice, tiles: Sequence[str],
                          interior: Sequence[str], b0: str, bn: str,
                          varset: VarSet = None) -> LabeledSnakeGraph:
    """Label a shape the way a triangulation does.

    The boundary edge on the south-west of ``G_j`` carries the label of
    ``G_{j-1}`` and the boundary edge on the north-east carries the label of
    ``G_{j+1}``; ``b0`` and ``bn`` stand in for the missing tiles ``G_0`` and
    ``G_{d+1}``.  ``interior`` lists the weights of ``e_0 .. e_d``.
    """
    d = shape.d
    if len(tiles) != d or len(interior) != d + 1:
        raise ValueError("need d tile labels and d + 1 interior weights")
    if d == 0:
        return LabeledSnakeGraph(shape, None, {E0: interior[0]}, {}, varset)
    label = {0: b0, d + 1: bn}
    label.update({j: tiles[j - 1] for j in range(1, d + 1)})
    weights = {}
    for j in range(0, d + 1):
        weights[interior_edge(shape, j, ne)] = interior[j]
    for j in range(1, d + 1):
        entry, exit_ = _entry_side(shape, j, ne), _exit_side(shape, j, ne)
        sw = "W" if entry == "S" else "S"
        nside = "E" if exit_ == "N" else "N"
        weights[EdgeId(j, sw)] = label[j - 1]
        weights[EdgeId(j, nside)] = label[j + 1]
    tile_label = {j: label[j] for j in range(1, d + 1)}
    return LabeledSnakeGraph(shape, ne, weights, tile_label, varset)


def generic_labeling(cf) -> LabeledSnakeGraph:
    """Triangulation-style labels with distinct names ``x1..xd``, ``e0..ed``, ``b0``, ``bn``."""
    shape, ne = cf_to_snake_with_edge(cf)
    d = shape.d
    tiles = [f"x{j}" for j in range(1, d + 1)]
    interior = [f"e{j}" for j in range(d + 1)]
    return triangulated_labeling(shape, ne, tiles, interior, "b0", "bn")


def straight_triples(g: LabeledSnakeGraph) -> list:
    """``(l_i, first_edge, second_edge)`` for each inner break ``i < n``.

    The two edges are those of ``G_{l-1}`` and ``G_{l+1}`` that meet the
    straight triple around ``G_l`` from the side; a missing tile gives ``None``.
    """
    if g.d == 0:
        return []
    out = []
    for ell in g.ells()[:-1]:
        horizontal = g.shape.direction(ell - 1, g.ne) == RIGHT
        before = EdgeId(ell - 1, "N" if horizontal else "E") if ell >= 2 else None
        after = EdgeId(ell + 1, "S" if horizontal else "W") if ell + 1 <= g.d else None
        out.append((ell, before, after))
    return out


def straight_conditions_hold(g: LabeledSnakeGraph) -> bool:
    """Side edges of every inner straight triple carry the middle tile's label."""
    for ell, before, after in straight_triples(g):
        want = g.tile_label[ell]
        for e in (before, after):
            if e is not None and g.weight_of(e) != want:
                return False
    return True


def require_conditions(g: LabeledSnakeGraph):
    if not straight_conditions_hold(g):
        raise LabelConditionError(
            "a straight triple's side edges do not carry the middle tile label")


def restrict(g: LabeledSnakeGraph, first: int, last: int) -> LabeledSnakeGraph:
    """Labeled subgraph on tiles ``first..last``, re-drawn with ``e_{first-1}`` south.

    An empty range (``first == last + 1``) is the single edge ``e_last``.
    """
    shape, mirrored = sub_shape(g.shape, first, last, g.ne)
    if shape.d == 0:
        name = g.e(last) if g.d > 0 else g.edge_weight[E0]
        return LabeledSnakeGraph(shape, None, {E0: name}, {}, g.varset)

    def parent_edge(e: EdgeId) -> EdgeId:
        side = _MIRROR_SIDE[e.side] if mirrored else e.side
        return EdgeId(first + e.tile - 1, side)

    weights = {e: g.weight_of(parent_edge(e)) for e in edges_of(shape)}
    tiles = {k: g.tile_label[first + k - 1] for k in range(1, shape.d + 1)}
    parent_dir = g.shape.direction(last, g.ne)
    if mirrored:
        parent_dir = UP if parent_dir == RIGHT else RIGHT
    ne = NeChoice.from_turn(parent_dir)
    return LabeledSnakeGraph(shape, ne, weights, tiles, g.varset)


# --- expansions -------------------------------------------------------------

def cross(g: LabeledSnakeGraph) -> LaurentPoly:
    result = LaurentPoly.one(g.varset)
    for j in range(1, g.d + 1):
        result = result * g.var(g.tile_label[j])
    return result


def matching_sum(g: LabeledSnakeGraph, method: str = "dp") -> LaurentPoly:
    """``sum_P x(P)`` over perfect matchings, by transfer matrix or enumeration."""
    if method == "enumerate":
        total = LaurentPoly.zero(g.varset)
        for m in enumerate_matchings(g.shape):
            term = LaurentPoly.one(g.varset)
            for e in m:
                term = term * g.var(g.edge_weight[e])
            total = total + term
        return total
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    return weighted_matching_sum(g.shape, g.ne, lambda e: g.var(g.weight_of(e)),
                                 LaurentPoly.one(g.varset))


def msw_expand(g: LabeledSnakeGraph, method: str = "dp") -> LaurentPoly:
    """The expansion ``sum_P x(P) / cross(g)``."""
    return matching_sum(g, method).div_by_monomial(cross(g))


def _check_index(g: LabeledSnakeGraph, i: int) -> int:
    n = len(g.cf())
    if not 1 <= i <= n:
        raise IndexError(f"piece index {i} outside 1..{n}")
    return n


def H_piece(g: LabeledSnakeGraph, i: int) -> LabeledSnakeGraph:
    _check_index(g, i)
    ell = (0,) + g.ells()
    return restrict(g, ell[i - 1] + 1, ell[i] - 1)


def x_H(g: LabeledSnakeGraph, i: int, method: str = "dp") -> LaurentPoly:
    return msw_expand(H_piece(g, i), method)


def x_H_formula(g: LabeledSnakeGraph, i: int) -> LaurentPoly:
    """Closed form: ``x_{l_{i-1}} (sum_j x_{e_j} / (x_j x_{j+1})) x_{l_i}``."""
    _check_index(g, i)
    if g.d == 0:
        return g.var(g.edge_weight[E0])
    bd = boundary_data(g)
    ell = (0,) + g.ells()

    def x(j):
        if j == 0:
            return g.var(bd.b0)
        if j == g.d + 1:
            return g.var(bd.bn)
        return g.var(g.tile_label[j])

    lo, hi = ell[i - 1], ell[i]
    total = LaurentPoly.zero(g.varset)
    for j in range(lo, hi):
        total = total + g.var(g.e(j)).div_by_monomial(x(j) * x(j + 1))
    return x(lo) * total * x(hi)


def L_prefactor(g: LabeledSnakeGraph, i: int) -> LaurentPoly:
    """Monomial in ``b_0..b_i`` multiplying ``x(H_i)``."""
    bd = boundary_data(g)
    b = lambda k: g.var(bd.b(k))
    if i == 1:
        return b(1) ** -1
    result = LaurentPoly.one(g.varset)
    for k in range(0, i + 1):
        sign = 1 if k % 2 == (i - 1) % 2 else -1
        mag = 1 if k in (0, i - 1, i) else 2
        result = result * b(k) ** (sign * mag)
    return result


def L_sequence(g: LabeledSnakeGraph) -> list:
    require_conditions(g)
    n = len(g.cf())
    return [x_H(g, i) * L_prefactor(g, i) for i in range(1, n + 1)]


def gamma_prime(g: LabeledSnakeGraph) -> LabeledSnakeGraph:
    """The graph with the first zigzag piece removed; for ``n = 1`` the single edge ``b_1``."""
    ell = g.ells()
    if len(ell) == 1:
        name = boundary_data(g).bn
        return LabeledSnakeGraph(SnakeShape(0, ()), None, {E0: name}, {}, g.varset)
    return restrict(g, ell[0] + 1, g.d)


@dataclass
class QuotientReport:
    lhs: LaurentPoly
    rhs: LaurentPoly
    L: list
    holds: bool

    def fraction_pair(self):
        return self.lhs, self.rhs


def continuant_fraction(entries: Sequence[LaurentPoly], varset: VarSet) -> RationalFunction:
    """``[L_1..L_n]`` as the unreduced pair ``N[L_1..L_n] / N[L_2..L_n]``."""
    one, zero = LaurentPoly.one(varset), LaurentPoly.zero(varset)
    return RationalFunction(continuant_ring(list(entries), one, zero),
                            continuant_ring(list(entries[1:]), one, zero))


def verify_quotient(g: LabeledSnakeGraph) -> QuotientReport:
    """Check ``x(g) * N[L_2..L_n] == x(gamma') * N[L_1..L_n]`` exactly."""
    L = L_sequence(g)
    frac = continuant_fraction(L, g.varset)
    top, bottom = msw_expand(g), msw_expand(gamma_prime(g))
    lhs, rhs = top * frac.den, bottom * frac.num
    return QuotientReport(lhs, rhs, L, lhs == rhs)


def quotient_fraction(g: LabeledSnakeGraph) -> RationalFunction:
    return RationalFunction(msw_expand(g), msw_expand(gamma_prime(g)))


def readings_agree(g: LabeledSnakeGraph) -> bool:
    """The two readings of the last edge give equal continued fractions of ``L_i``."""
    a = continuant_fraction(L_sequence(g.with_ne(NeChoice.NORTH)), g.varset)
    b = continuant_fraction(L_sequence(g.with_ne(NeChoice.EAST)), g.varset)
    return frac_eq(a, b)


# --- complex specialisation --------------------------------------------------

def ceil_modulus(z) -> int:
    """Smallest integer ``a >= 0`` with ``a^2 >= |z|^2``, computed exactly."""
    from fractions import Fraction
    from math import isqrt

    n2 = real_part(z) ** 2 + imag_part(z) ** 2
    n2 = Fraction(n2)
    a = isqrt(n2.numerator // n2.denominator)
    while a * a < n2:
        a += 1
    return a


def complex_specialize(z: Sequence) -> tuple:
    """Graph of ``[a_1..a_n]`` with ``a_j = ceil|z_j|`` and the point making ``L_j = z_j``.

    Returns ``(graph, point, a)``.  Every variable is 1 except the weight of
    ``e_{l_j - 1}``, which is ``z_j - a_j + 1``.  A single entry of modulus at
    most 1 uses ``a_1 = 2``: ``G[1]`` is the bare edge and carries no entry.
    """
    z = [normalize(v) for v in z]
    if not z:
        raise ValueError("need at least one entry")
    a = []
    for k, v in enumerate(z, 1):
        if is_zero(v):
            raise ValueError(f"entry {k} is zero")
        a.append(ceil_modulus(v))
    if len(a) == 1 and a[0] == 1:
        a[0] = 2
    g = generic_labeling(a)
    point = {name: 1 for name in g.varset.names}
    for j, ell in enumerate(ell_positions(a)):
        point[f"e{ell - 1}"] = normalize(z[j] - a[j] + 1)
    return g, point, tuple(a)


# --- random valid graphs -----------------------------------------------------

def random_cf(rng: random.Random, max_d: int) -> tuple:
    """A random positive continued fraction whose graph has between 1 and ``max_d`` tiles."""
    total = rng.randint(2, max_d + 1)
    coeffs, left = [], total
    while left:
        a = rng.randint(1, left)
        coeffs.append(a)
        left -= a
    return tuple(coeffs)


def random_triangulated(rng: random.Random, max_d: int, pool: int = None,
                        flip_reading: bool = True) -> LabeledSnakeGraph:
    """Random triangulation-style labeling; names drawn with repetition from a pool."""
    cf = random_cf(rng, max_d)
    shape, ne = cf_to_snake_with_edge(cf)
    if flip_reading and rng.random() < 0.5:
        ne = ne.flipped()
    d = shape.d
    pool = pool or rng.randint(2, 3 * d + 3)
    names = [f"x{k}" for k in range(1, pool + 1)]
    pick = lambda: rng.choice(names)
    return triangulated_labeling(shape, ne, [pick() for _ in range(d)],
                                 [pick() for _ in range(d + 1)], pick(), pick())


def random_conditioned(rng: random.Random, max_d: int, pool: int = None,
                       flip_reading: bool = True) -> LabeledSnakeGraph:
    """Random weights everywhere, then forced to satisfy only the straight-triple condition."""
    cf = random_cf(rng, max_d)
    shape, ne = cf_to_snake_with_edge(cf)
    if flip_reading and rng.random() < 0.5:
        ne = ne.flipped()
    d = shape.d
    pool = pool or rng.randint(2, 4 * d + 4)
    names = [f"x{k}" for k in range(1, pool + 1)]
    weights = {e: rng.choice(names) for e in edges_of(shape)}
    tiles = {j: rng.choice(names) for j in range(1, d + 1)}
    for reading in (ne, ne.flipped()):
        g = LabeledSnakeGraph(shape, reading, weights, tiles)
        for ell, before, after in straight_triples(g):
            for e in (before, after):
                if e is not None:
                    weights[canonical_edge(shape, e)] = tiles[ell]
    return LabeledSnakeGraph(shape, ne, weights, tiles)


def example_labeled_graph() -> LabeledSnakeGraph:
    """Five tiles labeled ``x1..x5`` read as ``[2,3,1]``, edges in triangulation style."""
    shape, ne = cf_to_snake_with_edge((2, 3, 1))
    return triangulated_labeling(shape, ne, [f"x{j}" for j in range(1, 6)],
                                 [f"e{j}" for j in range(6)], "b0", "b3")


# --- text format -------------------------------------------------------------

def format_labeled(g: LabeledSnakeGraph) -> str:
    lines = [format_shape(g.shape)]
    if g.ne is not None:
        lines.append(f"ne = {g.ne.value}")
    for e in edges_of(g.shape):
        lines.append(f"edge {e} = {g.edge_weight[e]}")
    for j in range(1, g.d + 1):
        lines.append(f"tile {j} = {g.tile_label[j]}")
    return "\n".join(lines) + "\n"


def parse_labeled(text: str) -> LabeledSnakeGraph:
    shape, ne = None, None
    weights, tiles = {}, {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if shape is None:
            shape = parse_shape(line)
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise ValueError(f"malformed line {raw!r}")
        key, value = key.strip(), value.strip()
        if key == "ne":
            ne = NeChoice(value.upper())
        elif key.startswith("edge "):
            e = canonical_edge(shape, parse_edge(key[5:]))
            if e in weights and weights[e] != value:
                raise ValueError(f"edge {e} given two weights")
            weights[e] = value
        elif key.startswith("tile "):
            tiles[int(key[5:])] = value
        else:
            raise ValueError(f"malformed line {raw!r}")
    if shape is None:
        raise ValueError("missing shape line")
    if ne is None and shape.d > 0:
        raise ValueError("missing 'ne = N' or 'ne = E' line")
    return LabeledSnakeGraph(shape, ne, weights, tiles)
