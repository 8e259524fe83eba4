"""Perfect matchings of snake graphs.

Three independent routes to the matching count:

* :func:`enumerate_matchings` lists matchings of the embedded lattice graph by
  branching on the first uncovered vertex (the brute-force oracle);
* :func:`count_matchings_dp` runs a two-state transfer matrix tile by tile;
* :func:`count_matchings` evaluates a continuant.

Edges are addressed as ``EdgeId(tile, side)``.  An interior edge has two
addresses; the canonical one belongs to the lower-numbered tile (its ``N`` or
``E`` side).  ``e_0`` is ``(1, 'S')``; on the single-edge graph that is the
only edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, NamedTuple, Optional, Union

from snakefrac.cf_core import continuant
from snakefrac.snake import UP, NeChoice, SnakeShape, snake_to_cf_canonical, tile_positions

ENUMERATION_GUARD = 25
SIDES = ("S", "W", "N", "E")
_SIDE_RANK = {s: k for k, s in enumerate(SIDES)}
_OPPOSITE = {"S": "N", "N": "S", "W": "E", "E": "W"}


class MatchingSizeError(ValueError):
    pass


class EdgeId(NamedTuple):
    tile: int
    side: str

    def sort_key(self):
        return (self.tile, _SIDE_RANK[self.side])

    def __str__(self):
        return f"{self.tile}.{self.side}"


E0 = EdgeId(1, "S")


def parse_edge(text: str) -> EdgeId:
    tile, _, side = text.strip().partition(".")
    side = side.upper()
    if side not in _SIDE_RANK:
        raise ValueError(f"not an edge address: {text!r}")
    return EdgeId(int(tile), side)


def canonical_edge(shape: SnakeShape, edge: EdgeId) -> EdgeId:
    """Rewrite the upper tile's address of an interior edge to the lower tile's."""
    tile, side = edge
    if shape.d == 0:
        if edge != E0:
            raise ValueError(f"the single edge graph has only {E0}")
        return edge
    if not 1 <= tile <= shape.d or side not in _SIDE_RANK:
        raise ValueError(f"edge {edge} is not in a {shape.d}-tile graph")
    if tile > 1 and side in ("S", "W"):
        prev = shape.turns[tile - 2]
        if (prev == UP) == (side == "S"):
            return EdgeId(tile - 1, "N" if side == "S" else "E")
    return edge


def edges_of(shape: SnakeShape) -> list:
    """All edges of the shape in canonical address, sorted."""
    if shape.d == 0:
        return [E0]
    out = set()
    for tile in range(1, shape.d + 1):
        for side in SIDES:
            out.add(canonical_edge(shape, EdgeId(tile, side)))
    return sorted(out, key=EdgeId.sort_key)


def interior_edge(shape: SnakeShape, j: int, ne: Optional[NeChoice] = None) -> EdgeId:
    """Canonical address of ``e_j`` for ``0 <= j <= d``."""
    if j == 0:
        return E0
    side = "N" if shape.direction(j, ne) == UP else "E"
    return EdgeId(j, side)


def edge_vertices(shape: SnakeShape, edge: EdgeId) -> tuple:
    if shape.d == 0:
        return ((0, 0), (1, 0))
    x, y = tile_positions(shape)[edge.tile - 1]
    return {
        "S": ((x, y), (x + 1, y)),
        "N": ((x, y + 1), (x + 1, y + 1)),
        "W": ((x, y), (x, y + 1)),
        "E": ((x + 1, y), (x + 1, y + 1)),
    }[edge.side]


@dataclass(frozen=True)
class PerfectMatching:
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=EdgeId.sort_key)))

    def __contains__(self, edge):
        return edge in self.edges

    def __iter__(self):
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)

    def sort_key(self):
        return tuple(e.sort_key() for e in self.edges)

    def __str__(self):
        return format_matching(self)


def format_matching(m: PerfectMatching) -> str:
    return " ".join(str(e) for e in m.edges)


def parse_matching(text: str) -> PerfectMatching:
    return PerfectMatching(tuple(parse_edge(tok) for tok in text.split()))


def enumerate_matchings(shape: SnakeShape) -> list:
    """Every perfect matching, ordered lexicographically by sorted edge lists."""
    if shape.d > ENUMERATION_GUARD:
        raise MatchingSizeError(
            f"{shape.d} tiles exceeds the enumeration guard of {ENUMERATION_GUARD}")
    edges = edges_of(shape)
    incident: dict = {}
    for e in edges:
        for v in edge_vertices(shape, e):
            incident.setdefault(v, []).append(e)
    vertices = sorted(incident)
    ends = {e: edge_vertices(shape, e) for e in edges}
    found = []

    def extend(covered: frozenset, chosen: list):
        free = next((v for v in vertices if v not in covered), None)
        if free is None:
            found.append(PerfectMatching(tuple(chosen)))
            return
        for e in incident[free]:
            a, b = ends[e]
            if a in covered or b in covered:
                continue
            extend(covered | {a, b}, chosen + [e])

    extend(frozenset(), [])
    found.sort(key=PerfectMatching.sort_key)
    return found


def is_perfect_matching(shape: SnakeShape, edges) -> bool:
    seen = []
    for e in edges:
        seen.extend(edge_vertices(shape, canonical_edge(shape, e)))
    all_vertices = {v for e in edges_of(shape) for v in edge_vertices(shape, e)}
    return len(seen) == len(set(seen)) and set(seen) == all_vertices


def count_matchings(shape: SnakeShape) -> int:
    """Number of perfect matchings, read off as a continuant."""
    if shape.d == 0:
        return 1
    return continuant(snake_to_cf_canonical(shape))


WeightLike = Union[Mapping, Callable]


def weighted_matching_sum(shape: SnakeShape, ne: Optional[NeChoice], weight: WeightLike,
                          one=1):
    """Sum over perfect matchings of the product of edge weights.

    Transfer matrix over tiles.  The state after tile ``j`` records whether
    both endpoints of ``e_j`` are already covered by edges of earlier tiles
    (state 1) or both are still free (state 0); parity rules out a mixed
    state.  Tile ``j`` owns its entry edge ``e_{j-1}`` and the two or three
    other edges that are not its exit ``e_j``.
    """
    w = weight if callable(weight) else weight.__getitem__
    if shape.d == 0:
        return w(E0)
    if ne is None:
        ne = NeChoice.NORTH
    free, covered = one, None
    for j in range(1, shape.d + 1):
        entry_dir, exit_dir = shape.direction(j - 1, ne), shape.direction(j, ne)
        entry_side = "S" if entry_dir == UP else "W"
        exit_side = "N" if exit_dir == UP else "E"
        far_side = _OPPOSITE[entry_side]
        entry_w = w(canonical_edge(shape, EdgeId(j, entry_side)))
        if exit_side == far_side:
            s1, s2 = (s for s in SIDES if s not in (entry_side, far_side))
            side_w = w(EdgeId(j, s1)) * w(EdgeId(j, s2))
            new_free = _add(_mul(free, entry_w), covered)
            new_covered = _mul(free, side_w)
        else:
            spare = next(s for s in SIDES if s not in (entry_side, far_side, exit_side))
            far_w = w(EdgeId(j, far_side))
            new_covered = _add(_mul(free, entry_w * far_w), _mul(covered, far_w))
            new_free = _mul(free, w(EdgeId(j, spare)))
        free, covered = new_free, new_covered
    exit_w = w(interior_edge(shape, shape.d, ne))
    return _add(_mul(free, exit_w), covered)


def _mul(a, b):
    return None if a is None else a * b


def _add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def count_matchings_dp(shape: SnakeShape) -> int:
    return weighted_matching_sum(shape, None, lambda e: 1)


def matching_weight(graph, m: PerfectMatching):
    """Monomial ``prod x(e)`` of a matching of a labeled graph."""
    from snakefrac.laurent import LaurentPoly

    allowed = set(edges_of(graph.shape))
    result = LaurentPoly.one(graph.varset)
    for e in m:
        e = canonical_edge(graph.shape, e)
        if e not in allowed:
            raise ValueError(f"edge {e} is not an edge of the graph")
        result = result * LaurentPoly.var(graph.varset, graph.edge_weight[e])
    if not is_perfect_matching(graph.shape, m.edges):
        raise ValueError("not a perfect matching of the graph")
    return result
