import os
import sys
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qdeform.algebra import LaurentPoly, RationalExpr

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=15, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

NAMES = ("q", "x", "y", "a")

coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))


@st.composite
def monomials(draw, names=NAMES, lo=-2, hi=3):
    exps = {n: draw(st.integers(lo, hi)) for n in names}
    return LaurentPoly.monomial(draw(coeffs.filter(lambda c: c != 0)), exps)


@st.composite
def polys(draw, names=NAMES, max_terms=4, lo=-2, hi=3):
    out = LaurentPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + draw(monomials(names, lo, hi))
    return out


@st.composite
def nonzero_polys(draw, names=NAMES, max_terms=3):
    p = draw(polys(names, max_terms))
    return p if p.terms else LaurentPoly.const(1) + LaurentPoly.var("q")


@st.composite
def rationals(draw):
    num = draw(polys(max_terms=3))
    dens = [draw(nonzero_polys(max_terms=2)) for _ in range(draw(st.integers(0, 2)))]
    return RationalExpr.fraction(num, dens)


@st.composite
def nonzero_rationals(draw):
    num = draw(nonzero_polys(max_terms=3))
    dens = [draw(nonzero_polys(max_terms=2)) for _ in range(draw(st.integers(0, 2)))]
    return RationalExpr.fraction(num, dens)


def random_poly(rng: random.Random, names=("x",), degree=4, params=("q", "a")) -> LaurentPoly:
    """Dense-ish polynomial of degree <= ``degree`` in names, Laurent in params."""
    out = LaurentPoly()
    for _ in range(rng.randint(1, 5)):
        exps = {n: rng.randint(0, degree) for n in names}
        exps.update({p: rng.randint(-1, 2) for p in params})
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if c:
            out = out + LaurentPoly.monomial(c, exps)
    return out


@pytest.fixture
def rng():
    return random.Random(20241018)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
