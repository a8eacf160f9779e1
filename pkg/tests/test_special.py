from fractions import Fraction
from math import factorial

import pytest

from qdeform import qkernel as K
from qdeform.algebra import Context, LaurentPoly, RationalExpr, ScaleUnavailable, q, render_in, series_equal, var
from qdeform.special import (
    Frame,
    ZeroDenominatorParameter,
    eq_deformed,
    gauss2F1_deformed,
    named_exponentials,
    named_polys,
    named_polys_direct,
    phi,
    r_poly,
    rn,
    rn_hypergeometric_rep,
    rn_qdifference_residual,
    rn_recurrence_step,
    rn_shift_expansion,
    terminating_phi,
)

x, y, z, u = var("x"), var("y"), var("z"), var("u")


@pytest.fixture
def f6():
    return Frame(("z",), 6)


def test_eq_deformed_specializations(f6):
    assert series_equal(eq_deformed(z, 1, f6), f6.inv_inf(z))
    assert series_equal(eq_deformed(z, 0, f6), f6.const(1) + f6.series(z).scale(K.inv_qq(1)))
    assert series_equal(eq_deformed(-z, q(), f6), f6.inf(z))


def test_sokal_functional_equation():
    f = Frame(("z",), 10)
    res = eq_deformed(z, u, f) - eq_deformed(q() * z, u, f) - f.series(z) * eq_deformed(u * z, u, f)
    assert res.is_zero()


def test_named_exponentials():
    f1 = Frame(("z",), 1)
    assert series_equal(named_exponentials("E_q", z, f1), f1.const(1) + f1.series(z).scale(K.inv_qq(1)))
    ctx = Context(2)
    f2 = Frame(("z",), 4, ctx)
    coeff = named_exponentials("Exton", z, f2).coefficient((2,))
    assert coeff == RationalExpr(LaurentPoly.qpow(Fraction(1, 2), ctx)) * K.inv_qq(2, 2)
    with pytest.raises(ScaleUnavailable):
        named_exponentials("Exton", z, Frame(("z",), 4))


def test_phi_reductions(f6):
    assert series_equal(phi([0], [], z, f6, u=u), eq_deformed(z, u, f6))
    # u = 1 gives the classical 1phi0 with coefficients (a;q)_n/(q;q)_n
    f5 = Frame(("z",), 5)
    s = phi(["a"], [], z, f5, u=1)
    for n in range(6):
        assert s.coefficient((n,)) == RationalExpr(K.qpochhammer(var("a"), n)) * K.inv_qq(n)


def test_phi_u_equal_q_drops_a_zero_parameter():
    f5 = Frame(("z",), 5)
    lhs = phi(["a", "b", 0], ["c", "d"], z, f5, u=q())
    rhs = phi(["a", "b"], ["c", "d"], -z, f5)
    assert series_equal(lhs, rhs)


def test_phi_rejects_vanishing_lower_parameter(f6):
    with pytest.raises(ZeroDenominatorParameter):
        phi(["a"], [q(-2)], z, f6)


def test_gauss2F1_deformed(f6):
    g = gauss2F1_deformed("a", "b", "c", "u", z, f6)
    assert g.coefficient((0,)) == RationalExpr(LaurentPoly.const(1))
    assert g.coefficient((1,)) == RationalExpr.fraction(var("a") * var("b"), [var("c")])


def test_gauss2F1_u1_equal_parameters_against_rising_factorials():
    f4 = Frame(("z",), 4)
    g = gauss2F1_deformed("a", "a", "a", 1, z, f4)
    a = var("a")
    for n in range(5):
        rising = LaurentPoly.const(1)
        for j in range(n):
            rising = rising * (a + j)
        assert g.coefficient((n,)) == RationalExpr(rising * Fraction(1, factorial(n)))


def test_r_poly_small_degrees():
    assert r_poly(0) == 1
    assert r_poly(1) == x + y
    assert render_in(r_poly(2, "x", "y", "u", "v"), ["x", "y"]) == "u*x^2 + (1+q)*x*y + v*y^2"
    assert rn(2) == x ** 2 + (1 + q()) * x * y + u * y ** 2


def test_named_polys_examples():
    assert named_polys("rogers_szego_h", 2) == 1 + (1 + q()) * x + x ** 2
    assert named_polys("cauchy_P", 2) == (x - y) * (x - q() * y)
    assert named_polys("stieltjes_wigert_S", 1) == 1 + q() * x
    assert named_polys("pochhammer_as_poly", 3) == K.qpochhammer(x, 3)
    with pytest.raises(ScaleUnavailable):
        named_polys("exton_E", 1)


@pytest.mark.parametrize("kind", ["rogers_szego_h", "inverse_h", "homogeneous_r", "pochhammer_as_poly",
                                  "stieltjes_wigert_S", "cauchy_P"])
def test_named_polys_match_direct_sums(kind):
    for n in range(9):
        assert named_polys(kind, n) == named_polys_direct(kind, n)


def test_exton_polys_match_direct_sums():
    ctx = Context(2)
    for n in range(9):
        assert named_polys("exton_E", n, ctx=ctx) == named_polys_direct("exton_E", n, ctx=ctx)


def test_recurrence_n1_by_hand():
    lhs, rhs = rn_recurrence_step(1, "first")
    assert lhs == rhs == x ** 2 + (1 + q()) * x * y + u * y ** 2
    assert x * (x + q() * y) + y * (x + u * y) == lhs


@pytest.mark.parametrize("which", ["first", "second"])
def test_recurrences(which):
    for n in range(11):
        lhs, rhs = rn_recurrence_step(n, which)
        assert lhs == rhs


def test_shift_expansion():
    for n in range(6):
        for m in range(6):
            lhs, rhs = rn_shift_expansion(n, m)
            assert lhs == rhs
    # m = 1 is the first recurrence
    assert rn_shift_expansion(3, 1)[1] == rn_recurrence_step(3, "first")[1]


def test_qdifference_residual_vanishes():
    for n in range(1, 9):
        first, second = rn_qdifference_residual(n)
        assert first == 0 and second == 0


def test_hypergeometric_rep():
    lhs, rhs = rn_hypergeometric_rep(1)
    assert rhs == RationalExpr(1 + x)
    for n in range(7):
        lhs, rhs = rn_hypergeometric_rep(n)
        assert RationalExpr(lhs) == rhs


def test_terminating_phi_needs_termination():
    from qdeform.algebra import NotFormallySmall
    with pytest.raises(NotFormallySmall):
        terminating_phi(["a"], [], x)


def test_limit_valuation_bound():
    # coefficient of x^k in R_n(1,x;u|q) minus u^C(k,2)/(q;q)_k has q-adic valuation >= n-k+1
    for n in (8, 10):
        p = rn(n, 1, x, u)
        for k in range(5):
            c = RationalExpr(p.coefficient_of("x", k)) - RationalExpr(u ** K.binom2(k)) * K.inv_qq(k)
            assert c.is_zero() or c.valuation("q") >= n - k + 1
