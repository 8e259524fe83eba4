"""Abstract snake graphs and their correspondence with continued fractions.

A shape with ``d`` tiles is stored as the list of ``d - 1`` turns, where
``turns[i]`` says whether tile ``G_{i+2}`` sits above (``U``) or to the right
(``R``) of tile ``G_{i+1}``.  Tile ``G_1`` is drawn with its south edge
``e_0`` at the bottom, which fixes the orientation of the whole graph.

Sign functions are normalised so that ``f(e_0) = -1``.  Within a tile the
north and west edges share a sign opposite to the south and east edges, so
the sign of the interior edges flips across a straight step and stays put
across a turn.  The direction of ``e_0`` counts as ``U``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from snakefrac.cf_core import (
    CFLike,
    ContinuedFraction,
    ell_positions,
    evaluate,
    from_rational,
)

UP = "U"
RIGHT = "R"
_FLIP_TURN = {UP: RIGHT, RIGHT: UP}


class NeChoice(Enum):
    NORTH = "N"
    EAST = "E"

    @property
    def turn(self) -> str:
        return UP if self is NeChoice.NORTH else RIGHT

    @classmethod
    def from_turn(cls, t: str) -> "NeChoice":
        return cls.NORTH if t == UP else cls.EAST

    def flipped(self) -> "NeChoice":
        return NeChoice.EAST if self is NeChoice.NORTH else NeChoice.NORTH


@dataclass(frozen=True)
class SnakeShape:
    d: int
    turns: tuple = ()

    def __post_init__(self):
        turns = tuple(self.turns)
        if self.d < 0:
            raise ValueError("tile count must be nonnegative")
        if len(turns) != max(self.d - 1, 0):
            raise ValueError(f"{self.d} tiles need {max(self.d - 1, 0)} turns, got {len(turns)}")
        if any(t not in (UP, RIGHT) for t in turns):
            raise ValueError(f"turns must be {UP!r} or {RIGHT!r}")
        object.__setattr__(self, "turns", turns)

    @property
    def is_single_edge(self) -> bool:
        return self.d == 0

    def is_straight(self) -> bool:
        return len(set(self.turns)) <= 1

    def is_zigzag(self) -> bool:
        return all(a != b for a, b in zip(self.turns, self.turns[1:]))

    def direction(self, j: int, ne: Optional[NeChoice] = None) -> str:
        """Direction of edge ``e_j``: ``e_0`` is ``U``, ``e_d`` follows ``ne``."""
        if j == 0:
            return UP
        if j == self.d:
            if ne is None:
                raise ValueError("the direction of e_d needs a north-east choice")
            return ne.turn
        return self.turns[j - 1]

    def __str__(self):
        return format_shape(self)


SINGLE_EDGE = SnakeShape(0, ())


def straight_shape(d: int) -> SnakeShape:
    """The column of ``d`` tiles (the straight graph relative to ``e_0``)."""
    return SnakeShape(d, (UP,) * max(d - 1, 0))


def zigzag_shape(d: int) -> SnakeShape:
    """Zigzag whose interior edges all carry the sign of ``e_0``."""
    turns = tuple(RIGHT if k % 2 == 0 else UP for k in range(max(d - 1, 0)))
    return SnakeShape(d, turns)


def reflect(shape: SnakeShape) -> SnakeShape:
    """Mirror in the diagonal ``x = y``; swaps every ``U`` with ``R``."""
    return SnakeShape(shape.d, tuple(_FLIP_TURN[t] for t in shape.turns))


def all_shapes(d: int):
    """Every shape with ``d`` tiles, in lexicographic turn order."""
    from itertools import product

    if d <= 1:
        yield SnakeShape(d, ())
        return
    for turns in product((RIGHT, UP), repeat=d - 1):
        yield SnakeShape(d, turns)


# --- signs -------------------------------------------------------------------

def sign_sequence(shape: SnakeShape, ne: NeChoice) -> tuple:
    """``(f(e_0), ..., f(e_d))`` as a tuple of ``-1``/``+1``."""
    if shape.d == 0:
        return (-1,)
    signs = [-1]
    prev = UP
    for j in range(1, shape.d + 1):
        cur = shape.direction(j, ne)
        signs.append(-signs[-1] if cur == prev else signs[-1])
        prev = cur
    return tuple(signs)


def interior_signs(shape: SnakeShape) -> tuple:
    """``(f(e_0), ..., f(e_{d-1}))``, which does not depend on the choice of ``e_d``."""
    if shape.d == 0:
        return (-1,)
    return sign_sequence(shape, NeChoice.NORTH)[:-1]


def shape_from_signs(signs: Sequence[int]) -> tuple[SnakeShape, Optional[NeChoice]]:
    """Inverse of :func:`sign_sequence`; ``signs[0]`` must be ``-1``."""
    signs = tuple(signs)
    if not signs or signs[0] != -1:
        raise ValueError("sign sequences are normalised to start with -1")
    if any(s not in (-1, 1) for s in signs):
        raise ValueError("signs must be -1 or +1")
    d = len(signs) - 1
    if d == 0:
        return SINGLE_EDGE, None
    dirs = [UP]
    for j in range(1, d + 1):
        dirs.append(dirs[-1] if signs[j] != signs[j - 1] else _FLIP_TURN[dirs[-1]])
    return SnakeShape(d, tuple(dirs[1:d])), NeChoice.from_turn(dirs[d])


def format_signs(signs: Sequence[int]) -> str:
    return "(" + ",".join("-" if s < 0 else "+" for s in signs) + ")"


def _run_lengths(signs: Sequence[int]) -> tuple:
    runs = []
    prev = None
    for s in signs:
        if s == prev:
            runs[-1] += 1
        else:
            runs.append(1)
            prev = s
    return tuple(runs)


def _signs_of_cf(coeffs: Sequence[int]) -> tuple:
    out = []
    for i, a in enumerate(coeffs):
        out.extend([-1 if i % 2 == 0 else 1] * a)
    return tuple(out)


# --- the maps between snake graphs and continued fractions -------------------

def cf_to_snake(cf: CFLike) -> tuple[SnakeShape, tuple]:
    """The snake graph of a positive continued fraction and its sign sequence."""
    coeffs = ContinuedFraction.of(cf).coeffs
    signs = _signs_of_cf(coeffs)
    shape, _ = shape_from_signs(signs)
    return shape, signs


def cf_to_snake_with_edge(cf: CFLike) -> tuple[SnakeShape, Optional[NeChoice]]:
    """The snake graph of ``cf`` together with the north-east edge its signs select."""
    coeffs = ContinuedFraction.of(cf).coeffs
    return shape_from_signs(_signs_of_cf(coeffs))


def snake_to_cf(shape: SnakeShape, ne: NeChoice) -> ContinuedFraction:
    """Read the continued fraction off the run lengths of ``(f(e_0), ..., f(e_d))``."""
    if shape.d == 0:
        raise ValueError("the single edge corresponds to [1], which is excluded here")
    return ContinuedFraction(_run_lengths(sign_sequence(shape, ne)))


def snake_to_cf_canonical(shape: SnakeShape) -> ContinuedFraction:
    """Continued fraction of the sign sequence with ``f(e_{d-1})`` taken twice."""
    if shape.d == 0:
        raise ValueError("the single edge has no canonical continued fraction here")
    signs = interior_signs(shape)
    return ContinuedFraction(_run_lengths(signs + signs[-1:]))


def sub_shape(shape: SnakeShape, first: int, last: int,
              ne: Optional[NeChoice] = None) -> tuple[SnakeShape, bool]:
    """Tiles ``G_first .. G_last`` re-drawn so that the entry edge is south.

    Returns the sub-shape and whether it had to be mirrored.  An empty range
    (``first == last + 1``) is the single edge ``e_last``.
    """
    if not (1 <= first <= last + 1 <= shape.d + 1):
        raise IndexError(f"tile range {first}..{last} outside 1..{shape.d}")
    if first > last:
        return SINGLE_EDGE, False
    mirrored = shape.direction(first - 1, ne) == RIGHT
    turns = shape.turns[first - 1:last - 1]
    if mirrored:
        turns = tuple(_FLIP_TURN[t] for t in turns)
    return SnakeShape(last - first + 1, turns), mirrored


def _check_cf_matches(shape: SnakeShape, coeffs: tuple):
    if sum(coeffs) - 1 != shape.d:
        raise ValueError(f"continued fraction {coeffs} does not have {shape.d} tiles")


def subgraph_H(shape: SnakeShape, cf: CFLike, i: int) -> SnakeShape:
    """The ``i``-th zigzag piece ``(G_{l_{i-1}+1}, ..., G_{l_i - 1})``."""
    coeffs = ContinuedFraction.of(cf).coeffs
    _check_cf_matches(shape, coeffs)
    if not 1 <= i <= len(coeffs):
        raise IndexError(f"piece index {i} outside 1..{len(coeffs)}")
    ell = (0,) + ell_positions(coeffs)
    first, last = ell[i - 1] + 1, min(ell[i] - 1, shape.d)
    return sub_shape(shape, first, last)[0]


def remove_H1(shape: SnakeShape, cf: CFLike) -> SnakeShape:
    """Shape of ``G[a_2, ..., a_n]``, the tiles after ``G_{l_1}``."""
    coeffs = ContinuedFraction.of(cf).coeffs
    _check_cf_matches(shape, coeffs)
    if len(coeffs) < 2:
        raise ValueError("removing H_1 needs at least two coefficients")
    return sub_shape(shape, coeffs[0] + 1, shape.d)[0]


def rotate180(shape: SnakeShape) -> SnakeShape:
    return SnakeShape(shape.d, tuple(reversed(shape.turns)))


def chi(shape: SnakeShape) -> Fraction:
    """``m(G) / m(G minus H_1)``, counted by the transfer-matrix path."""
    from snakefrac.matchings import count_matchings_dp

    if shape.d == 0:
        raise ValueError("chi is not defined on the single edge")
    cf = snake_to_cf_canonical(shape)
    rest = remove_H1(shape, cf) if len(cf) > 1 else None
    den = count_matchings_dp(rest) if rest is not None else 1
    return Fraction(count_matchings_dp(shape), den)


def chi_via_cf(shape: SnakeShape) -> Fraction:
    return evaluate(snake_to_cf_canonical(shape))


def snakes_with_matching_count(N: int) -> list:
    """All shapes with exactly ``N`` perfect matchings, ordered by ``q`` in ``N/q``."""
    return [shape for _, shape in snakes_with_matching_count_cfs(N)]


def snakes_with_matching_count_cfs(N: int) -> list:
    """``(cf, shape)`` pairs behind :func:`snakes_with_matching_count`."""
    if N < 1:
        raise ValueError("N must be positive")
    if N == 1:
        return [(ContinuedFraction((1,)), SINGLE_EDGE)]
    out = []
    for q in range(1, N):
        if gcd(N, q) == 1:
            cf = from_rational(Fraction(N, q))
            out.append((cf, cf_to_snake(cf)[0]))
    return out


def tile_positions(shape: SnakeShape) -> list:
    """Lower-left corners of the tiles, ``G_1`` at the origin."""
    if shape.d == 0:
        return []
    pos = [(0, 0)]
    for t in shape.turns:
        x, y = pos[-1]
        pos.append((x, y + 1) if t == UP else (x + 1, y))
    return pos


# --- text format -------------------------------------------------------------

def format_shape(shape: SnakeShape) -> str:
    return f"{shape.d}:{''.join(shape.turns)}"


def parse_shape(text: str) -> SnakeShape:
    d_text, sep, turns = text.strip().partition(":")
    try:
        d = int(d_text)
    except ValueError:
        raise ValueError(f"not a shape: {text!r}") from None
    return SnakeShape(d, tuple(turns.strip().upper()))
