import random

import pytest
from hypothesis import given, strategies as st

from snakefrac.cf_core import continuant, continuant_ring
from snakefrac.gaussian import GaussianRational
from snakefrac.laurent import format_poly, frac_eq
from snakefrac.labeled import (
    LabelConditionError,
    LabeledSnakeGraph,
    L_sequence,
    complex_specialize,
    cross,
    example_labeled_graph,
    format_labeled,
    gamma_prime,
    generic_labeling,
    matching_sum,
    msw_expand,
    parse_labeled,
    quotient_fraction,
    continuant_fraction,
    random_conditioned,
    random_triangulated,
    readings_agree,
    require_conditions,
    straight_conditions_hold,
    verify_quotient,
    x_H,
    x_H_formula,
)
from snakefrac.matchings import EdgeId, count_matchings, edges_of
from snakefrac.snake import NeChoice, SnakeShape, cf_to_snake, straight_shape

seeds = st.integers(0, 10 ** 9)


def test_example_cross_and_gamma_prime():
    g = example_labeled_graph()
    assert format_poly(cross(g)) == "x1*x2*x3*x4*x5"
    gp = gamma_prime(g)
    assert gp.d == 3 and [gp.tile_label[j] for j in (1, 2, 3)] == ["x3", "x4", "x5"]


def test_example_both_readings():
    g = example_labeled_graph()
    assert g.with_ne(NeChoice.EAST).cf().coeffs == (2, 3, 1)
    assert g.with_ne(NeChoice.NORTH).cf().coeffs == (2, 4)
    for ne in NeChoice:
        rep = verify_quotient(g.with_ne(ne))
        assert rep.holds
        assert frac_eq(quotient_fraction(g.with_ne(ne)), continuant_fraction(rep.L, g.varset))
    assert readings_agree(g)


def test_single_tile_expansion():
    g = LabeledSnakeGraph(SnakeShape(1, ()), NeChoice.NORTH,
                          {EdgeId(1, "S"): "a", EdgeId(1, "W"): "b", EdgeId(1, "N"): "c", EdgeId(1, "E"): "d"},
                          {1: "x1"})
    assert format_poly(msw_expand(g)) == "a*c*x1^-1 + b*d*x1^-1"
    assert verify_quotient(g).holds
    assert g.cf().coeffs == (1, 1) and len(L_sequence(g)) == 2
    assert g.with_ne(NeChoice.EAST).cf().coeffs == (2,)
    assert len(L_sequence(g.with_ne(NeChoice.EAST))) == 1


def test_n_equals_one_gamma_prime_is_an_edge():
    g = generic_labeling((3,))
    gp = gamma_prime(g)
    assert gp.d == 0
    assert format_poly(msw_expand(gp)) == "bn"


def test_a_equal_one_piece_is_entry_edge():
    g = generic_labeling((1, 3))
    assert format_poly(x_H_formula(g, 1)) == "e0"
    assert x_H(g, 1) == x_H_formula(g, 1)


def test_complex_example():
    z = [GaussianRational(0, 2), GaussianRational(-3, 1)]
    g, point, a = complex_specialize(z)
    assert a == (2, 4)
    special = {k: v for k, v in point.items() if v != 1}
    assert special == {"e1": GaussianRational(-1, 2), "e5": GaussianRational(-6, 1)}
    L = [p.eval(point) for p in L_sequence(g)]
    assert L == z and continuant_ring(L) == GaussianRational(-1, -6)


def test_complex_positive_integers_use_unit_weights():
    g, point, a = complex_specialize([3, 1, 2])
    assert a == (3, 1, 2) and set(point.values()) == {1}


def test_remark_conditions_alone_are_not_enough():
    # labels satisfy only the straight-triple condition, not the triangulation rule
    shape, _ = cf_to_snake((2, 1))
    w = {EdgeId(1, "S"): "x6", EdgeId(1, "W"): "x3", EdgeId(1, "N"): "x6", EdgeId(1, "E"): "x6",
         EdgeId(2, "S"): "x6", EdgeId(2, "N"): "x3", EdgeId(2, "E"): "x3"}
    g = LabeledSnakeGraph(shape, NeChoice.EAST, w, {1: "x4", 2: "x6"})
    assert g.cf().coeffs == (2, 1) and straight_conditions_hold(g)
    assert not verify_quotient(g).holds


def test_condition_violation_is_reported():
    w = {e: "y" for e in edges_of(straight_shape(3))}
    g = LabeledSnakeGraph(straight_shape(3), NeChoice.NORTH, w, {1: "a", 2: "b", 3: "c"})
    with pytest.raises(LabelConditionError):
        require_conditions(g)


def test_text_format_round_trip():
    g = example_labeled_graph()
    h = parse_labeled("# example\n" + format_labeled(g))
    assert format_labeled(h) == format_labeled(g)
    assert msw_expand(h) == msw_expand(g)
    with pytest.raises(ValueError):
        parse_labeled("2:U\nedge 1.S = a\n")


@given(seeds)
def test_quotient_on_random_graphs(seed):
    g = random_triangulated(random.Random(seed), 8)
    assert verify_quotient(g).holds
    for i in range(1, len(g.cf()) + 1):
        assert x_H(g, i) == x_H_formula(g, i)


@given(seeds)
def test_dp_matches_enumeration(seed):
    g = random_triangulated(random.Random(seed), 7)
    assert matching_sum(g, "dp") == matching_sum(g, "enumerate")


@given(seeds)
def test_readings_agree(seed):
    g = random_triangulated(random.Random(seed), 7)
    assert readings_agree(g)


@given(seeds)
def test_conditioned_generator_meets_condition_for_both_readings(seed):
    g = random_conditioned(random.Random(seed), 7)
    assert straight_conditions_hold(g) and straight_conditions_hold(g.with_ne(g.ne.flipped()))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4).filter(lambda c: c != [1]))
def test_all_ones_gives_matching_count(cf):
    g = generic_labeling(cf)
    assert msw_expand(g).eval({v: 1 for v in g.varset.names}) == continuant(cf)
    assert count_matchings(g.shape) == continuant(cf)
