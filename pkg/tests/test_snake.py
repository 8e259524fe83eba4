from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from snakefrac.cf_core import evaluate, g_map
from snakefrac.matchings import count_matchings
from snakefrac.snake import (
    SINGLE_EDGE,
    NeChoice,
    SnakeShape,
    all_shapes,
    cf_to_snake,
    cf_to_snake_with_edge,
    chi,
    chi_via_cf,
    format_shape,
    format_signs,
    parse_shape,
    remove_H1,
    rotate180,
    snake_to_cf,
    snake_to_cf_canonical,
    snakes_with_matching_count,
    snakes_with_matching_count_cfs,
    straight_shape,
    subgraph_H,
    tile_positions,
    zigzag_shape,
)

FIG4 = (2, 3, 1, 2, 3)
cfs = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(tuple)
shapes = st.integers(1, 12).flatmap(
    lambda d: st.lists(st.sampled_from("UR"), min_size=d - 1, max_size=d - 1).map(
        lambda t: SnakeShape(d, tuple(t))))


def test_fig4_signs_and_shape():
    shape, signs = cf_to_snake(FIG4)
    assert shape.d == 10
    assert format_signs(signs) == "(-,-,+,+,+,-,+,+,-,-,-)"
    shape2, ne = cf_to_snake_with_edge(FIG4)
    assert shape2 == shape and snake_to_cf(shape, ne).coeffs == FIG4


def test_all_ones_is_straight():
    shape, _ = cf_to_snake((1, 1, 1, 1))
    assert shape == straight_shape(3)


def test_all_twos_is_staircase():
    shape, _ = cf_to_snake((2, 2, 2))
    pos = tile_positions(shape)
    assert pos == [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)]


def test_single_edge_for_one():
    assert cf_to_snake((1,))[0] == SINGLE_EDGE


def test_straight_two_tiles_both_readings():
    s = straight_shape(2)
    assert snake_to_cf(s, NeChoice.EAST).coeffs == (1, 2)
    assert snake_to_cf(s, NeChoice.NORTH).coeffs == (1, 1, 1)


@pytest.mark.parametrize("shape, cf", [(straight_shape(2), (1, 2)), (zigzag_shape(2), (3,)),
                                       (SnakeShape(1, ()), (2,))])
def test_canonical_examples(shape, cf):
    assert snake_to_cf_canonical(shape).coeffs == cf


def test_subgraph_H_examples():
    shape, _ = cf_to_snake(FIG4)
    assert subgraph_H(shape, FIG4, 2) == zigzag_shape(2)
    assert subgraph_H(shape, FIG4, 3) == SINGLE_EDGE
    four, _ = cf_to_snake((4,))
    assert subgraph_H(four, (4,), 1) == zigzag_shape(3)


def test_remove_H1_examples():
    assert remove_H1(cf_to_snake((2, 3, 4))[0], (2, 3, 4)) == cf_to_snake((3, 4))[0]
    assert remove_H1(cf_to_snake((1, 1, 1))[0], (1, 1, 1)) == SnakeShape(1, ())
    rest = remove_H1(cf_to_snake(FIG4)[0], FIG4)
    assert rest == cf_to_snake((3, 1, 2, 3))[0] and rest.d == 8


def test_rotate_examples():
    assert rotate180(cf_to_snake((2, 3, 4))[0]) == cf_to_snake((4, 3, 2))[0]
    assert rotate180(straight_shape(5)) == straight_shape(5)
    assert rotate180(SnakeShape(1, ())) == SnakeShape(1, ())


@pytest.mark.parametrize("shape, value", [(zigzag_shape(2), Fraction(3)), (straight_shape(2), Fraction(3, 2)),
                                          (cf_to_snake((2, 3, 4))[0], Fraction(30, 13))])
def test_chi_examples(shape, value):
    assert chi(shape) == value


def test_totient_examples():
    fig5 = [(11,), (5, 2), (3, 1, 2), (2, 1, 3), (2, 5), (1, 1, 5), (1, 1, 1, 3), (1, 2, 1, 2), (1, 4, 2), (1, 10)]
    assert [cf.coeffs for cf, _ in snakes_with_matching_count_cfs(11)] == fig5
    assert snakes_with_matching_count(1) == [SINGLE_EDGE]
    three = snakes_with_matching_count(3)
    assert set(three) == {zigzag_shape(2), straight_shape(2)}
    brute = [s for s in all_shapes(2) if count_matchings(s) == 3]
    assert set(brute) == set(three)


@given(cfs.filter(lambda c: c != (1,)))
def test_cf_round_trip(cf):
    shape, ne = cf_to_snake_with_edge(cf)
    assert shape.d == sum(cf) - 1
    assert snake_to_cf(shape, ne).coeffs == cf
    assert snake_to_cf_canonical(shape) == g_map(cf)


@given(shapes)
def test_shape_round_trip(shape):
    for ne in NeChoice:
        assert cf_to_snake_with_edge(snake_to_cf(shape, ne)) == (shape, ne)
        assert g_map(snake_to_cf(shape, ne)) == snake_to_cf_canonical(shape)
    assert parse_shape(format_shape(shape)) == shape


@given(shapes)
def test_diagram_commutes(shape):
    assert chi(shape) == chi_via_cf(shape) == evaluate(snake_to_cf_canonical(shape))


@given(shapes)
def test_rotation_reverses_cf(shape):
    # rotating reverses the interior run lengths; the value of the reversed canonical CF is kept
    assert count_matchings(rotate180(shape)) == count_matchings(shape)
    assert rotate180(rotate180(shape)) == shape


def test_parse_shape_rejects():
    with pytest.raises(ValueError):
        parse_shape("x:UU")
    with pytest.raises(ValueError):
        parse_shape("3:UX")
