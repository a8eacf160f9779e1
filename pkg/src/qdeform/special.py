"""Deformed q-exponentials, deformed basic hypergeometric series and R_n.

Most constructors take a :class:`Frame` that fixes the small symbols, the
truncation order and the base scale, so builders read close to the formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Optional, Sequence, Tuple, Union

from . import qkernel as K
from .algebra import symbols as S
from .algebra.poly import LaurentPoly
from .algebra.rational import RationalExpr
from .algebra.series import NotFormallySmall, TruncatedSeries

Poly = LaurentPoly
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


class ZeroDenominatorParameter(ValueError):
    """A lower parameter makes some (b;q)_n vanish inside the requested range."""


def P(x) -> LaurentPoly:
    """Coerce ints, Fractions and symbol names to LaurentPoly."""
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, str):
        return LaurentPoly.var(x)
    return LaurentPoly.const(x)


def mono_pow(u, e: int) -> LaurentPoly:
    """u**e with 0**0 = 1; negative e needs a monomial."""
    u = P(u)
    if e == 0:
        return ONE
    if not u.terms:
        return ZERO
    return u ** e


# -- frame ------------------------------------------------------------------


@dataclass(frozen=True)
class Frame:
    """Small symbols, truncation order and base scale shared by one builder."""

    smalls: Tuple[str, ...]
    order: int
    ctx: S.Context = field(default=S.DEFAULT)

    def q(self, e=1, coeff=1) -> LaurentPoly:
        return LaurentPoly.qpow(e, self.ctx, coeff)

    def const(self, c=1) -> TruncatedSeries:
        return TruncatedSeries.const(self.smalls, self.order, c if not isinstance(c, (str,)) else P(c))

    def zero(self) -> TruncatedSeries:
        return TruncatedSeries.zero(self.smalls, self.order)

    def series(self, p) -> TruncatedSeries:
        if isinstance(p, TruncatedSeries):
            return p
        if isinstance(p, RationalExpr):
            return TruncatedSeries.from_poly(p, self.smalls, self.order)
        return TruncatedSeries.from_poly(P(p), self.smalls, self.order)

    def small_degree(self, a: LaurentPoly) -> int:
        """Least total small degree over the terms of ``a``."""
        return min(sum(e) for e in a.split(self.smalls))

    def eq(self, z, u) -> TruncatedSeries:
        return eq_deformed(P(z), u, self)

    def inf(self, a) -> TruncatedSeries:
        """(a;q)_inf by Euler's sum."""
        return K.qpochhammer_inf_series(P(a), self.smalls, self.order, self.ctx)

    def inv_inf(self, a) -> TruncatedSeries:
        """1/(a;q)_inf by Euler's sum."""
        return K.qpochhammer_inf_series(P(a), self.smalls, self.order, self.ctx, inverse=True)

    def poch(self, a, n: int) -> TruncatedSeries:
        return K.qpochhammer_series(P(a), n, self.smalls, self.order, self.ctx)

    def inv_poch(self, a, n: int) -> TruncatedSeries:
        return K.qpochhammer_series(P(a), n, self.smalls, self.order, self.ctx, inverse=True)

    def inv_qq(self, n: int) -> RationalExpr:
        return K.inv_qq(n, self.ctx.scale)

    def sum(self, term: Callable[[int], TruncatedSeries], degree_step: int, start: int = 0) -> TruncatedSeries:
        """sum_{k>=start} term(k) where term(k) has small degree >= degree_step*k.

        The bound is what makes the truncated sum exact; callers state it.
        """
        if degree_step < 1:
            raise NotFormallySmall("summand has no growing small degree")
        total = self.zero()
        k = start
        while k * degree_step <= self.order:
            total = total + term(k)
            k += 1
        return total


# -- deformed exponentials -------------------------------------------------------


def eq_deformed(z: LaurentPoly, u, frame: Frame) -> TruncatedSeries:
    """Sokal's e_q(z,u) = sum u^C(n,2) z^n/(q;q)_n; u = 0 gives 1 + z/(1-q)."""
    u = P(u)
    z = P(z)
    if not z.terms:
        return frame.const(1)
    if not u.terms:
        return frame.const(1) + frame.series(z) * frame.inv_qq(1)
    return K.power_sum(
        lambda n: frame.inv_qq(n) * mono_pow(u, K.binom2(n)), z, frame.smalls, frame.order
    )


def named_exponentials(kind: str, z, frame: Frame) -> TruncatedSeries:
    """E_q(z) = e_q(z,q); Exton e_q(z, sqrt q); Rogers-Ramanujan e_q(qz, q^2)."""
    z = P(z)
    if kind == "e_q":
        return eq_deformed(z, 1, frame)
    if kind == "E_q":
        return eq_deformed(z, frame.q(1), frame)
    if kind == "Exton":
        return eq_deformed(z, frame.q(Fraction(1, 2)), frame)
    if kind == "RogersRamanujan":
        return eq_deformed(z * frame.q(1), frame.q(2), frame)
    raise ValueError(f"unknown exponential {kind!r}")


def exton_exp(z, frame: Frame) -> TruncatedSeries:
    return named_exponentials("Exton", z, frame)


def rr_exp(z, frame: Frame) -> TruncatedSeries:
    return named_exponentials("RogersRamanujan", z, frame)


# -- deformed basic hypergeometric series ------------------------------------------


@dataclass(frozen=True)
class HyperSpec:
    """r Phi s with a deformation u; ``u=None`` gives the classical r phi s.

    ``base`` is the q-exponent of the base (1/2 for base sqrt q).
    """

    upper: Tuple[LaurentPoly, ...]
    lower: Tuple[LaurentPoly, ...]
    z: LaurentPoly
    u: Optional[LaurentPoly] = None
    base: Union[int, Fraction] = 1

    @classmethod
    def make(cls, upper: Sequence, lower: Sequence, z, u=None, base=1) -> "HyperSpec":
        return cls(tuple(P(a) for a in upper), tuple(P(b) for b in lower), P(z),
                   None if u is None else P(u), base)


def _terminating_length(a: LaurentPoly, base_key: int) -> Optional[int]:
    """m if a = base^(-m) for some m >= 0, else None."""
    if not a.is_monomial():
        return None
    key, c = a.single_term()
    if c != 1 or base_key == 0 or key % base_key:
        return None
    m = -key // base_key
    if m < 0 or set(S.decode(key)) - {0}:
        return None
    return m


def phi_deformed(spec: HyperSpec, frame: Frame) -> TruncatedSeries:
    """sum u^C(n,2) (a;p)_n/(p,b;p)_n [(-1)^n p^C(n,2)]^(1+s-r) z^n, base p.

    Built from the term ratio.  The sum ends at the truncation order (z small)
    or at m when an upper parameter is p^(-m).
    """
    ctx = frame.ctx
    base_key = ctx.q_exponent(spec.base)
    r, s = len(spec.upper), len(spec.lower)
    extra = 1 + s - r
    z = spec.z
    zdeg = frame.small_degree(z) if z.terms else 0
    stops = [m for m in (_terminating_length(a, base_key) for a in spec.upper) if m is not None]
    if z.terms and zdeg == 0 and not stops:
        raise NotFormallySmall("argument has no small content and the series does not terminate")
    limit = min(stops) if stops else None

    def in_range(n):
        if not z.terms:
            return n == 0
        if limit is not None and n > limit:
            return False
        return zdeg == 0 or n * zdeg <= frame.order

    for b in spec.lower:
        m = _terminating_length(b, base_key)
        if m is not None and in_range(m + 1):
            raise ZeroDenominatorParameter(f"lower parameter vanishes at n = {m + 1}")

    upper_small = [a for a in spec.upper if a.terms and frame.small_degree(a) > 0]
    upper_free = [a for a in spec.upper if not (a.terms and frame.small_degree(a) > 0)]
    lower_small = [b for b in spec.lower if b.terms and frame.small_degree(b) > 0]
    lower_free = [b for b in spec.lower if not (b.terms and frame.small_degree(b) > 0)]

    zs = frame.series(z) if zdeg > 0 else None
    total = frame.const(1)
    term = frame.const(1)
    n = 0
    while in_range(n + 1):
        coeff = _ratio(spec, n, base_key, upper_free, lower_free, extra)
        if zs is None:
            term = term.scale(coeff * z)
        else:
            term = (term * zs).scale(coeff)
        step = base_key * n
        for a in upper_small:
            term = term * frame.series(ONE - a.shift(step))
        for b in lower_small:
            term = term * frame.inv_poch(b.shift(step), 1)
        total = total + term
        n += 1
    return total


def _ratio(spec: HyperSpec, n: int, base_key: int, upper, lower, extra: int) -> RationalExpr:
    """v_{n+1}/v_n without the argument and without small-content parameters."""
    step = base_key * n
    num = ONE
    for a in upper:
        num = num * (ONE - a.shift(step))
    if spec.u is not None:
        num = num * mono_pow(spec.u, n)
    if extra:
        num = num * (-LaurentPoly.from_key(step)) ** extra
    dens = [ONE - LaurentPoly.from_key(step + base_key)] + [ONE - b.shift(step) for b in lower]
    return RationalExpr.fraction(num, dens)


def phi(upper: Sequence, lower: Sequence, z, frame: Frame, u=None, base=1) -> TruncatedSeries:
    return phi_deformed(HyperSpec.make(upper, lower, z, u, base), frame)


def gauss2F1_deformed(a, b, c, u, z, frame: Frame) -> TruncatedSeries:
    """sum u^C(n,2) (a)_n (b)_n / (c)_n z^n/n! with ordinary rising factorials."""
    a, b, c, u, z = P(a), P(b), P(c), P(u), P(z)

    def coeff(n: int):
        num = mono_pow(u, K.binom2(n))
        dens = []
        for j in range(n):
            num = num * (a + j) * (b + j)
            dens.append(c + j)
        return RationalExpr.fraction(num * Fraction(1, factorial(n)), dens)

    return K.power_sum(coeff, z, frame.smalls, frame.order)


# -- deformed homogeneous polynomials -----------------------------------------------


@dataclass(frozen=True)
class RnSpec:
    n: int
    x: LaurentPoly = field(default_factory=lambda: LaurentPoly.var("x"))
    y: LaurentPoly = field(default_factory=lambda: LaurentPoly.var("y"))
    u: LaurentPoly = field(default_factory=lambda: LaurentPoly.var("u"))
    v: LaurentPoly = field(default_factory=lambda: LaurentPoly.var("v"))


def r_poly(n: int, x="x", y="y", u=1, v="u", ctx: S.Context = S.DEFAULT) -> LaurentPoly:
    """R_n(x,y;u,v|q) = sum_k [n k] u^C(n-k,2) v^C(k,2) x^(n-k) y^k.

    The defaults give the u-deformed R_n(x,y;u|q) = R_n(x,y;1,u|q).
    """
    if isinstance(n, RnSpec):
        spec = n
        return r_poly(spec.n, spec.x, spec.y, spec.u, spec.v, ctx)
    if n < 0:
        raise ValueError("n must be non-negative")
    x, y, u, v = P(x), P(y), P(u), P(v)
    out = LaurentPoly()
    for k in range(n + 1):
        term = K.gauss_binomial(n, k, ctx) * mono_pow(u, K.binom2(n - k)) * mono_pow(v, K.binom2(k))
        out = out + term * mono_pow(x, n - k) * mono_pow(y, k)
    return out


def rn(n: int, x="x", y="y", u="u", ctx: S.Context = S.DEFAULT) -> LaurentPoly:
    """The u-deformed R_n(x,y;u|q)."""
    return r_poly(n, x, y, 1, u, ctx)


POLY_KINDS = ("rogers_szego_h", "inverse_h", "homogeneous_r", "pochhammer_as_poly",
              "stieltjes_wigert_S", "cauchy_P", "exton_E")


def named_polys(kind: str, n: int, x="x", y="y", ctx: S.Context = S.DEFAULT) -> LaurentPoly:
    """Specializations of R_n; single-variable families ignore ``y``."""
    x, y = P(x), P(y)
    q = LaurentPoly.qpow(1, ctx)
    if kind == "rogers_szego_h":
        return r_poly(n, 1, x, 1, 1, ctx)
    if kind == "inverse_h":
        return r_poly(n, 1, x, q, q, ctx)
    if kind == "homogeneous_r":
        return r_poly(n, x, y, 1, 1, ctx)
    if kind == "pochhammer_as_poly":
        return r_poly(n, 1, -x, 1, q, ctx)
    if kind == "stieltjes_wigert_S":
        return r_poly(n, 1, q * x, 1, q * q, ctx)
    if kind == "cauchy_P":
        return r_poly(n, x, -y, 1, q, ctx)
    if kind == "exton_E":
        return r_poly(n, x, y, 1, LaurentPoly.qpow(Fraction(1, 2), ctx), ctx)
    raise ValueError(f"unknown polynomial family {kind!r}")


def named_polys_direct(kind: str, n: int, x="x", y="y", ctx: S.Context = S.DEFAULT) -> LaurentPoly:
    """The same families from their own summation formulas."""
    x, y = P(x), P(y)
    g = lambda k: K.gauss_binomial(n, k, ctx)
    qk = lambda e: LaurentPoly.qpow(e, ctx)
    out = LaurentPoly()
    if kind == "cauchy_P":
        out = ONE
        for k in range(n):
            out = out * (x - y * qk(k))
        return out
    for k in range(n + 1):
        if kind == "rogers_szego_h":
            t = g(k) * x ** k
        elif kind == "inverse_h":
            t = g(k) * qk(K.binom2(n) + k * (k - n)) * x ** k
        elif kind == "homogeneous_r":
            t = g(k) * x ** (n - k) * y ** k
        elif kind == "pochhammer_as_poly":
            t = g(k) * qk(K.binom2(k)) * (-x) ** k
        elif kind == "stieltjes_wigert_S":
            t = g(k) * qk(k * k) * x ** k
        elif kind == "exton_E":
            t = g(k) * qk(Fraction(K.binom2(k), 2)) * x ** (n - k) * y ** k
        else:
            raise ValueError(f"unknown polynomial family {kind!r}")
        out = out + t
    return out


# -- R_n identities as (lhs, rhs) pairs ------------------------------------------------


def rn_recurrence_step(n: int, which: str = "first", ctx: S.Context = S.DEFAULT) -> Tuple[LaurentPoly, LaurentPoly]:
    x, y, u = P("x"), P("y"), P("u")
    q = LaurentPoly.qpow(1, ctx)
    lhs = rn(n + 1, x, y, u, ctx)
    if which == "first":
        rhs = x * rn(n, x, q * y, u, ctx) + y * rn(n, x, u * y, u, ctx)
    elif which == "second":
        rhs = x * rn(n, x, y, u, ctx) + y * rn(n, q * x, u * y, u, ctx)
    else:
        raise ValueError("which must be 'first' or 'second'")
    return lhs, rhs


def rn_shift_expansion(n: int, m: int, ctx: S.Context = S.DEFAULT) -> Tuple[LaurentPoly, LaurentPoly]:
    x, y, u = P("x"), P("y"), P("u")
    lhs = rn(n + m, x, y, u, ctx)
    rhs = LaurentPoly()
    for k in range(m + 1):
        arg = LaurentPoly.qpow(m - k, ctx) * mono_pow(u, k) * y
        rhs = rhs + (K.gauss_binomial(m, k, ctx) * mono_pow(u, K.binom2(k))
                     * x ** (m - k) * y ** k * rn(n, x, arg, u, ctx))
    return lhs, rhs


def rn_qdifference_residual(n: int, ctx: S.Context = S.DEFAULT) -> Tuple[LaurentPoly, LaurentPoly]:
    """Residuals of both forms of the q-difference equation for y = R_n(1,x;u|q).

    Each must be the zero polynomial.
    """
    x, u = P("x"), P("u")
    uinv = u ** -1
    q = LaurentPoly.qpow(1, ctx)
    qinv = LaurentPoly.qpow(-1, ctx)
    yx = rn(n, 1, x, u, ctx)
    dy = K.dq_poly(yx, "x", ctx)
    first = (dy.scale_var("x", uinv) + LaurentPoly.qpow(n - 1, ctx) * x * dy.scale_var("x", qinv)
             - (ONE - LaurentPoly.qpow(n, ctx)) * yx)
    second = (yx.scale_var("x", uinv) - yx.scale_var("x", q * uinv)
              + LaurentPoly.qpow(n, ctx) * uinv * x * yx.scale_var("x", qinv) - uinv * x * yx)
    return first, second


def rn_hypergeometric_rep(n: int, ctx: S.Context = S.DEFAULT) -> Tuple[LaurentPoly, LaurentPoly]:
    """R_n(1,x;u|q) against the terminating 2Phi0(q^-n, 0; -; q, u, q^n x)."""
    x, u = P("x"), P("u")
    lhs = rn(n, 1, x, u, ctx)
    rhs = terminating_phi([LaurentPoly.qpow(-n, ctx), ZERO], [], LaurentPoly.qpow(n, ctx) * x, u, ctx)
    return lhs, rhs


def terminating_phi(upper: Sequence, lower: Sequence, z, u=None, ctx: S.Context = S.DEFAULT,
                    base=1) -> RationalExpr:
    """A terminating series (some upper parameter is base^-m) summed exactly."""
    spec = HyperSpec.make(upper, lower, z, u, base)
    base_key = ctx.q_exponent(base)
    stops = [m for m in (_terminating_length(a, base_key) for a in spec.upper) if m is not None]
    if not stops:
        raise NotFormallySmall("series does not terminate")
    extra = 1 + len(spec.lower) - len(spec.upper)
    total = RationalExpr(ONE)
    term = RationalExpr(ONE)
    for n in range(min(stops)):
        term = term * _ratio(spec, n, base_key, spec.upper, spec.lower, extra) * spec.z
        total = total + term
    return total
