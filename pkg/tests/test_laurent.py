from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from snakefrac.gaussian import GaussianRational
from snakefrac.laurent import (
    LaurentPoly,
    RationalFunction,
    VarSet,
    VarSetMismatch,
    format_poly,
    frac_add,
    frac_eq,
    frac_inv,
    frac_mul,
    parse_poly,
    variables,
)

VS = VarSet(("x", "y", "z"))
x, y, z = (LaurentPoly.var(VS, n) for n in VS.names)
coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4),
                   st.builds(GaussianRational, st.integers(-3, 3), st.integers(-3, 3)))
monomials = st.builds(lambda c, e: LaurentPoly(VS, {tuple(e): c}), coeffs,
                      st.lists(st.integers(-3, 3), min_size=3, max_size=3))
polys = st.lists(monomials, max_size=4).map(lambda ms: sum(ms, LaurentPoly.zero(VS)))
points = st.fixed_dictionaries({n: st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=5)
                                for n in VS.names})


def test_examples():
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert x ** -1 * x == LaurentPoly.one(VS)
    assert (x ** 2 + x * y).div_by_monomial(x) == x + y
    assert format_poly(1 / x) == "x^-1"
    assert LaurentPoly.const(VS, 7).eval({}) == 7


def test_mutation_polynomial():
    _, x1, x2, x3 = variables(["x1", "x2", "x3"])
    x1p = (x2 ** 2 + x3 ** 2) * x1 ** -1
    assert x1p == (x2 ** 2 + x3 ** 2).div_by_monomial(x1)
    assert x1p.eval({"x1": 1, "x2": 1, "x3": 2}) == 5
    assert format_poly(x1p) == "x1^-1*x2^2 + x1^-1*x3^2"


def test_fractions():
    f = RationalFunction(x, y)
    assert frac_eq(frac_inv(f), RationalFunction(y, x))
    assert frac_eq(RationalFunction(x ** 2, x), RationalFunction(x, LaurentPoly.one(VS)))
    assert frac_eq(frac_add(f, f), RationalFunction(2 * x, y))
    assert frac_eq(frac_mul(f, frac_inv(f)), RationalFunction.of(LaurentPoly.one(VS)))


def test_errors():
    with pytest.raises(ValueError):
        (x + y).monomial_inverse()
    with pytest.raises(VarSetMismatch):
        x + LaurentPoly.var(VarSet(("x",)), "x")
    with pytest.raises(ZeroDivisionError):
        (1 / x).eval({"x": 0})
    with pytest.raises(ValueError):
        parse_poly("x*+")


def test_gaussian_coefficients_format():
    p = LaurentPoly.const(VS, GaussianRational(0, 2)) * x
    assert format_poly(p) == "(2i)*x"
    assert parse_poly("(2i)*x", VS) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero(VS)


@given(polys, polys, points)
def test_eval_is_homomorphism(a, b, pt):
    assert (a * b).eval(pt) == a.eval(pt) * b.eval(pt)
    assert (a + b).eval(pt) == a.eval(pt) + b.eval(pt)


@given(polys)
def test_text_round_trip(p):
    assert parse_poly(format_poly(p), VS) == p


@given(polys, monomials.filter(lambda m: not m.is_zero()))
def test_monomial_division(p, m):
    assert p.div_by_monomial(m) * m == p


@given(polys)
def test_all_ones_is_coefficient_sum(p):
    assert p.eval({n: 1 for n in VS.names}) == sum(p.coefficients(), 0)
