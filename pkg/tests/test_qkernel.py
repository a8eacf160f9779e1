import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdeform import qkernel as K
from qdeform.algebra import LaurentPoly, RationalExpr, TruncatedSeries, q, series_equal, var

from conftest import random_poly

x, z, a = var("x"), var("z"), var("a")


def qq(n):
    out = LaurentPoly.const(1)
    for j in range(1, n + 1):
        out = out * (1 - q(j))
    return out


def test_pochhammer_examples():
    assert K.qpochhammer(a, 0) == 1
    assert K.qpochhammer(q(), 2) == 1 - q() - q(2) + q(3)
    assert K.qpochhammer(x, 1) == 1 - x


def test_inf_pochhammer_small_argument():
    s = K.qpochhammer_inf_series(z, ("z",), 2)
    # oracle: (z;q)_inf = (1-z)(1-qz)...; z^1 is -sum q^i, z^2 is sum_{i<j} q^(i+j) = q/((1-q)(1-q^2))
    assert s.coefficient((0,)) == RationalExpr(LaurentPoly.const(1))
    assert s.coefficient((1,)) == RationalExpr.fraction(LaurentPoly.const(-1), [1 - q()])
    assert s.coefficient((2,)) == RationalExpr.fraction(q(), [1 - q(), 1 - q(2)])
    inv = K.qpochhammer_inf_series(z, ("z",), 1, inverse=True)
    assert series_equal(inv, TruncatedSeries.from_poly(LaurentPoly.const(1), ("z",), 1)
                        + TruncatedSeries.from_poly(z, ("z",), 1).scale(RationalExpr.fraction(LaurentPoly.const(1), [1 - q()])))


def test_inf_pochhammer_at_zero():
    s = K.qpochhammer_inf_series(LaurentPoly(), ("z",), 4)
    assert series_equal(s, TruncatedSeries.const(("z",), 4, 1))


def _brute_inf(m, r, order):
    out = LaurentPoly.const(1)
    j = 0
    while m + r * j <= order:
        out = out * (1 - q(m + r * j))
        j += 1
    return K.truncate_q(out, order)


def test_qpower_truncated_examples():
    assert K.qpochhammer_qpower_truncated(1, 5, 5) == 1 - q()
    assert K.qpochhammer_qpower_truncated(4, 5, 3) == 1
    assert K.qpochhammer_qpower_truncated(1, 1, 3) == 1 - q() - q(2)


@pytest.mark.parametrize("m,r,order", [(1, 1, 3), (1, 1, 12), (2, 5, 20), (3, 5, 20), (1, 2, 15), (4, 5, 30)])
def test_qpower_truncated_against_brute_product(m, r, order):
    assert K.qpochhammer_qpower_truncated(m, r, order) == _brute_inf(m, r, order)


def _gauss_oracle(n, k):
    # [n k]_q counts k-subsets of {0..n-1} by sum minus k(k-1)/2
    out = LaurentPoly()
    for sub in itertools.combinations(range(n), k):
        out = out + q(sum(sub) - k * (k - 1) // 2)
    return out


def test_gauss_binomial_examples():
    assert K.gauss_binomial(5, 0) == 1
    assert K.gauss_binomial(2, 1) == 1 + q()
    assert K.gauss_binomial(4, 2) == 1 + q() + 2 * q(2) + q(3) + q(4)
    assert K.gauss_binomial(3, 5) == 0


@pytest.mark.parametrize("n", range(0, 10))
def test_gauss_binomial_against_subset_counting(n):
    for k in range(n + 1):
        assert K.gauss_binomial(n, k) == _gauss_oracle(n, k)
        # and the Pochhammer quotient, cleared of denominators
        assert K.gauss_binomial(n, k) * qq(k) * qq(n - k) == qq(n)


def test_dq_examples():
    assert K.dq(x ** 2, "x") == (1 - q(2)) * x
    assert K.dq(LaurentPoly.const(1), "x") == 0
    assert K.dq_pow(x ** 2, "x", 2) == (1 - q(2)) * (1 - q())
    assert K.dq_pow(x ** 2, "x", 0) == x ** 2
    assert K.dq_pow(x ** 2, "x", 3) == 0
    assert K.dq_pow(x ** 3, "x", 2) == (1 - q(2)) * (1 - q(3)) * x


def _leibniz_rhs(f, g, n):
    total = LaurentPoly()
    for k in range(n + 1):
        fk = K.dq_pow(f, "x", k).scale_var("x", q(n - k))
        gk = K.dq_pow(g, "x", n - k)
        total = total + K.gauss_binomial(n, k) * fk * gk
    return total


@given(st.integers(0, 2 ** 32), st.integers(0, 4))
@settings(max_examples=25)
def test_leibniz_rule(seed, n):
    rng = random.Random(seed)
    f, g = random_poly(rng), random_poly(rng)
    assert K.dq_pow(f * g, "x", n) == _leibniz_rhs(f, g, n)


@given(st.integers(0, 2 ** 32))
@settings(max_examples=15)
def test_dq_on_series_is_additive_and_obeys_product_rule(seed):
    rng = random.Random(seed)
    smalls = ("x",)
    f = TruncatedSeries.from_poly(random_poly(rng), smalls, 6)
    g = TruncatedSeries.from_poly(random_poly(rng), smalls, 6)
    assert series_equal((f + g).dq("x"), f.dq("x") + g.dq("x"))
    # D(fg) = D(f)(x) g(x) + f(qx) D(g)(x), compared at order 5 (D lowers degree)
    lhs = (f * g).dq("x").truncate(5)
    rhs = (f.dq("x") * g + f.scale_var("x", q()) * g.dq("x")).truncate(5)
    assert series_equal(lhs, rhs)
