from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdeform.algebra import Context, LaurentPoly, ScaleUnavailable, TruncatedSeries, q, series_equal, var
from qdeform.operators import (
    OperatorSpec,
    TargetSymbolInCoefficient,
    apply_operator,
    operator_on_exponential,
    operator_on_product,
)
from qdeform.special import Frame, phi, r_poly, rn

x, y, a, b, u = var("x"), var("y"), var("a"), var("b"), var("u")
XY = ("x", "y")


def ser(p, order, smalls=XY):
    return TruncatedSeries.from_poly(p, smalls, order)


@pytest.mark.parametrize("n", range(7))
def test_operator_on_power_gives_rn(n):
    out = apply_operator(OperatorSpec.make(), ser(x ** n, n))
    assert series_equal(out, ser(rn(n), n))


def test_operator_on_constant():
    out = apply_operator(OperatorSpec.make(u=1), TruncatedSeries.const(XY, 4, 1))
    assert series_equal(out, TruncatedSeries.const(XY, 4, 1))


def test_saad_operator_on_square():
    out = apply_operator(OperatorSpec.saad("b"), ser(x ** 2, 2, ("x", "b")))
    assert series_equal(out, ser(x ** 2 - (1 + q()) * x * b + q() * b ** 2, 2, ("x", "b")))
    assert out.to_poly() == r_poly(2, x, -b, 1, q())


def test_operator_refuses_operand_with_y():
    with pytest.raises(TargetSymbolInCoefficient):
        apply_operator(OperatorSpec.make(), ser(x * y, 3))
    with pytest.raises(TargetSymbolInCoefficient):
        apply_operator(OperatorSpec.make(), ser(x * y, 3, ("x",)))


def test_exton_operator_needs_scale_two():
    with pytest.raises(ScaleUnavailable):
        OperatorSpec.exton()
    assert OperatorSpec.exton(ctx=Context(2)).u == LaurentPoly.qpow(Fraction(1, 2), Context(2))


@st.composite
def x_polys(draw, deg=4):
    out = LaurentPoly()
    for k in range(deg + 1):
        c = draw(st.integers(-3, 3))
        if c:
            out = out + c * q(draw(st.integers(-1, 2))) * x ** k
    return out


@given(x_polys(), x_polys(), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=25)
def test_operator_is_linear(f, g, alpha, beta):
    op = OperatorSpec.make()
    lhs = apply_operator(op, ser(alpha * f + beta * g, 4))
    rhs = apply_operator(op, ser(f, 4)).scale(alpha) + apply_operator(op, ser(g, 4)).scale(beta)
    assert series_equal(lhs, rhs)


@given(st.integers(0, 3), st.lists(st.integers(-3, 3), min_size=1, max_size=4))
@settings(max_examples=20)
def test_operator_on_shifted_power_series(n, coeffs):
    order = n + len(coeffs) - 1
    f = sum((c * x ** (n + k) for k, c in enumerate(coeffs)), LaurentPoly())
    expected = sum((c * rn(n + k) for k, c in enumerate(coeffs)), LaurentPoly())
    assert series_equal(apply_operator(OperatorSpec.make(), ser(f, order)), ser(expected, order))


def test_on_exp_v1_collapses():
    f = Frame(XY, 6)
    lhs, rhs = operator_on_exponential(OperatorSpec.make(), "a", 1, f)
    assert series_equal(lhs, rhs)
    assert series_equal(rhs, f.inv_inf(a * x) * f.eq(a * y, u))


def test_on_exp_u1_v1_classical():
    f = Frame(XY, 6)
    lhs, rhs = operator_on_exponential(OperatorSpec.make(u=1), "a", 1, f)
    target = f.inv_inf(a * x) * f.eq(a * y, 1)
    assert series_equal(lhs, target) and series_equal(rhs, target)


def test_on_exp_v_equal_q():
    f = Frame(XY, 6)
    # e_q(-ax, q) = (ax;q)_inf
    lhs, rhs = operator_on_exponential(OperatorSpec.make(), -a, q(), f)
    assert series_equal(lhs, rhs)
    assert series_equal(f.eq(-a * x, q()), f.inf(a * x))
    closed = f.inf(a * x) * phi([0, 0], [a * x], -a * y, f, u=q() * u)
    assert series_equal(rhs, closed)
    # the displayed form with argument +ay does not hold
    literal = f.inf(a * x) * phi([0, 0], [a * x], a * y, f, u=q() * u)
    assert not series_equal(rhs, literal)


def test_on_product_general():
    f = Frame(XY, 5)
    lhs, rhs = operator_on_product(OperatorSpec.make(), "a", "v", "b", "w", f)
    assert series_equal(lhs, rhs)


def test_on_product_chen_liu():
    f = Frame(XY, 6)
    lhs, rhs = operator_on_product(OperatorSpec.make(u=1), "a", 1, "b", 1, f)
    closed = f.inf(a * b * x * y) * f.inv_inf(a * x) * f.inv_inf(b * x) * f.inv_inf(a * y) * f.inv_inf(b * y)
    assert series_equal(lhs, closed) and series_equal(rhs, closed)
