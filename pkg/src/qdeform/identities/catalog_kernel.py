"""Notation-level identities: q-shifted factorials, binomials, exponentials, D_q, rPhis."""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb
from typing import List

from .. import qkernel as K
from ..algebra.poly import LaurentPoly
from ..algebra.rational import RationalExpr
from ..special import Frame, P, eq_deformed, gauss2F1_deformed, mono_pow, named_polys, phi
from .common import C2, inf_ratio, multi_sum
from .engine import BuildContext, Check, IdentitySpec

ONE = LaurentPoly.const(1)


def _q(bc: BuildContext, e=1, coeff=1) -> LaurentPoly:
    return LaurentPoly.qpow(e, bc.ctx, coeff)


# -- q-shifted factorials ----------------------------------------------------------


def _iden1(bc):
    f = bc.frame
    a = P("a")
    return f.poch(a, bc["n"]), f.inf(a) * f.inv_inf(a * _q(bc, bc["n"]))


def _iden2(bc):
    a, n, k = P("a"), bc["n"], bc["k"]
    lhs = K.qpochhammer(a, n + k, bc.ctx)
    return lhs, K.qpochhammer(a, n, bc.ctx) * K.qpochhammer(a * _q(bc, n), k, bc.ctx)


def _iden3(bc):
    a, n = P("a"), bc["n"]
    rhs = K.qpochhammer(a, n, bc.ctx, base=2) * K.qpochhammer(a * _q(bc), n, bc.ctx, base=2)
    return K.qpochhammer(a, 2 * n, bc.ctx), rhs


def _iden4(bc):
    a, n = P("a"), bc["n"]
    return K.qpochhammer(a * a, n, bc.ctx, base=2), K.qpochhammer(a, n, bc.ctx) * K.qpochhammer(-a, n, bc.ctx)


def _qinverse_convention(bc):
    x, n = P("x"), bc["n"]
    lhs = K.qpochhammer(x, n, bc.ctx, base=-1)
    rhs = _q(bc, -C2(n)) * (-x) ** n * K.qpochhammer(x ** -1, n, bc.ctx)
    return lhs, rhs


def _binomial_exponents(bc):
    n, k = bc["n"], bc["k"]
    # independent oracle: math.comb for the non-negative arguments
    yield Check("C(n+k,2)", C2(n + k), comb(n, 2) + comb(k, 2) + n * k)
    yield Check("C(n-k,2)", C2(n - k), comb(n, 2) + comb(k, 2) + k * (1 - n))


def _pascal(bc):
    n, ctx = bc["n"], bc.ctx
    for k in range(n + 2):
        top = K.gauss_binomial(n + 1, k, ctx)
        first = K.gauss_binomial(n, k, ctx) + _q(bc, n + 1 - k) * K.gauss_binomial(n, k - 1, ctx)
        second = _q(bc, k) * K.gauss_binomial(n, k, ctx) + K.gauss_binomial(n, k - 1, ctx)
        yield Check(f"k={k} first rule", top, first)
        yield Check(f"k={k} second rule", top, second)
    for k in range(n + 1):
        # the Pascal table against the defining quotient of (q;q)-products
        quotient = (RationalExpr(K.qpochhammer(_q(bc), n, ctx)) * K.inv_qq(k, ctx.scale)
                    * K.inv_qq(n - k, ctx.scale))
        yield Check(f"k={k} definition", RationalExpr(K.gauss_binomial(n, k, ctx)), quotient)


def _pascal_qinverse(bc):
    n, ctx = bc["n"], bc.ctx
    for k in range(n + 1):
        rhs = (RationalExpr(K.qpochhammer(_q(bc, -n), k, ctx)) * K.inv_qq(k, ctx.scale)
               * ((-_q(bc, n)) ** k * _q(bc, -C2(k))))
        yield Check(f"k={k}", RationalExpr(K.gauss_binomial(n, k, ctx)), rhs)


# -- exponentials --------------------------------------------------------------------


def _qbinomial_theorem(bc):
    f = bc.frame
    a, z = P("a"), P("z")
    lhs = phi([a], [], z, f)
    yield Check("1phi0 = (az)_inf/(z)_inf", lhs, inf_ratio(f, [a * z], [z]))
    direct = K.power_sum(lambda n: RationalExpr(K.qpochhammer(a, n, bc.ctx)) * f.inv_qq(n), z, f.smalls, f.order)
    yield Check("1phi0 = sum (a)_n z^n/(q)_n", lhs, direct)


def _exp_specializations(bc):
    f = bc.frame
    z, u = P("z"), P("u")
    yield Check("e_q(z,1)", eq_deformed(z, 1, f), f.inv_inf(z))
    yield Check("e_q(-z,q)", eq_deformed(-z, _q(bc), f), f.inf(z))
    rr = K.power_sum(lambda n: f.inv_qq(n) * _q(bc, n * n), z, f.smalls, f.order)
    yield Check("e_q(qz,q^2)", eq_deformed(_q(bc) * z, _q(bc, 2), f), rr)
    yield Check("u = 0 case", eq_deformed(z, 0, f), f.const(1) + f.series(z) * f.inv_qq(1))
    yield Check("1Phi0 form", eq_deformed(z, u, f), phi([0], [], z, f, u=u))


def _exton_exp(bc):
    f = bc.frame
    z = P("z")
    half = Fraction(1, 2)
    lhs = eq_deformed(z, _q(bc, half), f)
    direct = K.power_sum(lambda n: f.inv_qq(n) * _q(bc, Fraction(C2(n), 2)), z, f.smalls, f.order)
    yield Check("series", lhs, direct)
    yield Check("1phi1 form", lhs, phi([0], [-_q(bc, half)], -z, f, base=half))


def _sokal(bc):
    f = bc.frame
    z, u = P("z"), P("u")
    e = lambda arg: eq_deformed(arg, u, f)
    return e(z) - e(_q(bc) * z) - e(u * z).shift((1,)), f.zero()


def _hn_generating(bc):
    f = bc.frame
    x, t = P("x"), P("t")
    lhs = multi_sum(f, ["t"], lambda n: RationalExpr(named_polys("rogers_szego_h", n, x, ctx=bc.ctx)) * f.inv_qq(n))
    return lhs, inf_ratio(f, [], [t, x * t])


def _hn_mehler(bc):
    f = bc.frame
    x, y, t = P("x"), P("y"), P("t")
    h = lambda n, v: named_polys("rogers_szego_h", n, v, ctx=bc.ctx)
    lhs = multi_sum(f, ["t"], lambda n: RationalExpr(h(n, x) * h(n, y)) * f.inv_qq(n))
    return lhs, inf_ratio(f, [x * y * t * t], [t, x * t, y * t, x * y * t])


def _hn_rogers(bc):
    f = bc.frame
    x, t, s = P("x"), P("t"), P("s")
    h = lambda n: named_polys("rogers_szego_h", n, x, ctx=bc.ctx)
    lhs = multi_sum(f, ["t", "s"], lambda n, m: RationalExpr(h(n + m)) * f.inv_qq(n) * f.inv_qq(m))
    return lhs, inf_ratio(f, [x * s * t], [t, x * t, s, x * s])


# -- the q-derivative ---------------------------------------------------------------


def random_poly(rng: random.Random, degree: int = 4) -> LaurentPoly:
    """A polynomial in x of degree <= ``degree`` with small integer and symbolic coefficients."""
    x, a = P("x"), P("a")
    out = LaurentPoly()
    for e in range(rng.randint(0, degree) + 1):
        c = rng.randint(-3, 3) + rng.randint(0, 1) * a
        out = out + c * x ** e
    return out


def _leibniz(bc):
    rng = random.Random(1000 + bc["trial"])
    f_, g_ = random_poly(rng), random_poly(rng)
    ctx = bc.ctx
    for n in range(5):
        lhs = K.dq_pow(f_ * g_, "x", n, ctx)
        rhs = LaurentPoly()
        for k in range(n + 1):
            gk = g_.scale_var("x", _q(bc, k))
            rhs = rhs + (_q(bc, k * (k - n)) * K.gauss_binomial(n, k, ctx)
                         * K.dq_pow(f_, "x", k, ctx) * K.dq_pow(gk, "x", n - k, ctx))
        yield Check(f"n={n}", lhs, rhs)


def _dq_monomial(bc):
    k, n = bc["k"], bc["n"]
    x = P("x")
    lhs = K.dq_pow(x ** k, "x", n, bc.ctx)
    if n > k:
        return lhs, LaurentPoly()
    rhs = RationalExpr(K.qpochhammer(_q(bc), k, bc.ctx)) * K.inv_qq(k - n, bc.ctx.scale) * x ** (k - n)
    return RationalExpr(lhs), rhs


def _kder_basic(bc):
    k = bc["k"]
    f = Frame(bc.smalls, bc.order + k, bc.ctx)
    a, u, x = P("a"), P("u"), P("x")
    lhs = _dq_series(eq_deformed(a * x, u, f), k, bc.ctx)
    rhs = eq_deformed(a * mono_pow(u, k) * x, u, f).scale(a ** k * mono_pow(u, C2(k)))
    return lhs, rhs.truncate(bc.order)


def _dq_series(series, n, ctx):
    for _ in range(n):
        series = series.dq("x", ctx)
    return series


def _product_general(bc):
    n = bc["n"]
    f = Frame(bc.smalls, bc.order + n, bc.ctx)
    a, b, u, v, x = P("a"), P("b"), P("u"), P("v"), P("x")
    lhs = _dq_series(eq_deformed(a * x, u, f) * eq_deformed(b * x, v, f), n, bc.ctx)
    rhs = f.zero()
    for k in range(n + 1):
        c = K.gauss_binomial(n, k, bc.ctx) * mono_pow(u, C2(k)) * mono_pow(v, C2(n - k)) * a ** k * b ** (n - k)
        rhs = rhs + (eq_deformed(a * mono_pow(u, k) * x, u, f)
                     * eq_deformed(b * _q(bc, k) * mono_pow(v, n - k) * x, v, f)).scale(c)
    return lhs, rhs.truncate(bc.order)


def iden6_pair(bc, literal: bool = False):
    n = bc["n"]
    f = Frame(bc.smalls, bc.order + n, bc.ctx)
    a, b, x = P("a"), P("b"), P("x")
    lhs = _dq_series(f.inf(a * x) * f.inf(b * x), n, bc.ctx)
    total = f.zero()
    for k in range(n + 1):
        c = K.gauss_binomial(n, k, bc.ctx) * _q(bc, k * (k - n)) * a ** k * b ** (n - k)
        total = total + f.inv_poch(a * x, k).scale(c)
    sign = 1 if literal else (-1) ** n
    rhs = (f.inf(a * x) * f.inf(b * _q(bc, n) * x) * total).scale(_q(bc, C2(n), sign))
    return lhs, rhs.truncate(bc.order)


def _iden7(bc):
    n = bc["n"]
    f = Frame(bc.smalls, bc.order + n, bc.ctx)
    a, b, x = P("a"), P("b"), P("x")
    base = f.inf(-a * x) * f.inv_inf(b * x)
    lhs = _dq_series(base, n, bc.ctx)
    total = f.zero()
    for k in range(n + 1):
        c = K.gauss_binomial(n, k, bc.ctx) * _q(bc, C2(k)) * a ** k * b ** (n - k)
        total = total + (f.poch(b * x, k) * f.inv_poch(-a * x, k)).scale(c)
    return lhs, (base * total).truncate(bc.order)


def _iden8(bc):
    n = bc["n"]
    f = Frame(bc.smalls, bc.order + n, bc.ctx)
    a, b, x = P("a"), P("b"), P("x")
    base = f.inv_inf(a * x) * f.inv_inf(b * x)
    lhs = _dq_series(base, n, bc.ctx)
    total = f.zero()
    for k in range(n + 1):
        c = K.gauss_binomial(n, k, bc.ctx) * a ** k * b ** (n - k)
        total = total + f.poch(b * x, k).scale(c)
    return lhs, (base * total).truncate(bc.order)


# -- deformed basic hypergeometric series ----------------------------------------------


def _deformed_reduction(bc):
    f = bc.frame
    z = P("z")
    q = _q(bc)
    yield Check("r=1", phi(["a1", 0], ["b1"], z, f, u=q), phi(["a1"], ["b1"], -z, f))
    yield Check("r=2", phi(["a1", "a2", 0], ["b1", "b2"], z, f, u=q), phi(["a1", "a2"], ["b1", "b2"], -z, f))


def phi21(a, b, c, u, z, frame: Frame, literal: bool = False):
    """2Phi1(a,b;c;q,u,z); ``literal`` divides by (b;q)_n instead of (c;q)_n."""
    if literal:
        return phi([a, b], [b], z, frame, u=u)
    return phi([a, b], [c], z, frame, u=u)


def _phi21_dq_pow(bc):
    n = bc["n"]
    f = Frame(bc.smalls, bc.order + n, bc.ctx)
    a, b, c, u, z = P("a"), P("b"), P("c"), P("u"), P("z")
    lhs = _dq_z(phi21(a, b, c, u, z, f), n, bc.ctx)
    qn = _q(bc, n)
    pref = (RationalExpr(K.qpochhammer(a, n, bc.ctx) * K.qpochhammer(b, n, bc.ctx) * mono_pow(u, C2(n)))
            * K.inv_qpochhammer(c, n, bc.ctx))
    rhs = phi21(a * qn, b * qn, c * qn, u, mono_pow(u, n) * z, f).scale(pref)
    return lhs, rhs.truncate(bc.order)


def _dq_z(series, n, ctx):
    for _ in range(n):
        series = series.dq("z", ctx)
    return series


def phi21_qdiff_residual(bc, literal: bool = False):
    """c z D^2 f - abq z^2 D^2[f(uz)] + (1-c) D f + [(1-a)(1-b)-(1-abq)] z D[f(uz)] - (1-a)(1-b) f(uz).

    D acts on g(z) = f(uz) as a function of z; the frame carries two extra
    orders so the residual is exact to the configured order.
    """
    f = Frame(bc.smalls, bc.order + 2, bc.ctx)
    a, b, c, u = P("a"), P("b"), P("c"), P("u")
    q = _q(bc)
    ctx = bc.ctx
    fz = phi21(a, b, c, u, P("z"), f, literal)
    g = fz.scale_var("z", u)
    d1f, d2f = _dq_z(fz, 1, ctx), _dq_z(fz, 2, ctx)
    d1g, d2g = _dq_z(g, 1, ctx), _dq_z(g, 2, ctx)
    res = (d2f.shift((1,), c) - d2g.shift((2,), a * b * q) + d1f.scale(ONE - c)
           + d1g.shift((1,), (ONE - a) * (ONE - b) - (ONE - a * b * q)) - g.scale((ONE - a) * (ONE - b)))
    return res.truncate(bc.order), Frame(bc.smalls, bc.order, ctx).zero()


def _limit_eq(bc):
    """z f''(z) - z^2 [f(uz)]'' + c f'(z) - (a+b+1) z [f(uz)]' - ab f(uz) for the deformed 2F1."""
    f = Frame(bc.smalls, bc.order + 2, bc.ctx)
    a, b, c, u = P("a"), P("b"), P("c"), P("u")
    fz = gauss2F1_deformed(a, b, c, u, P("z"), f)
    g = fz.scale_var("z", u)
    d1f, d2f = fz.derivative("z"), fz.derivative("z").derivative("z")
    d1g, d2g = g.derivative("z"), g.derivative("z").derivative("z")
    res = (d2f.shift((1,)) - d2g.shift((2,)) + d1f.scale(c) - d1g.shift((1,), a + b + 1) - g.scale(a * b))
    return res.truncate(bc.order), Frame(bc.smalls, bc.order, bc.ctx).zero()


def entries() -> List[IdentitySpec]:
    E = IdentitySpec
    return [
        E("pochhammer.iden1", "Some useful identities for $q$-shifted factorial",
          "(a;q)_n = (a;q)_inf/(aq^n;q)_inf as series in a", _iden1, ("a",), {"n": (0, 8)},
          notes="Both infinite products are Euler sums in the small symbol a; the finite form "
                "(a;q)_{n+k} = (a;q)_n (aq^n;q)_k is checked separately as pochhammer.iden2."),
        E("pochhammer.iden2", "Some useful identities for $q$-shifted factorial",
          "(a;q)_{n+k} = (a;q)_n (aq^n;q)_k", _iden2, (), {"n": (0, 8), "k": (0, 8)}, default_order=None),
        E("pochhammer.iden3", "Some useful identities for $q$-shifted factorial",
          "(a;q)_{2n} = (a;q^2)_n (aq;q^2)_n", _iden3, (), {"n": (0, 8)}, default_order=None),
        E("pochhammer.iden4", "Some useful identities for $q$-shifted factorial",
          "(a^2;q^2)_n = (a;q)_n (-a;q)_n", _iden4, (), {"n": (0, 8)}, default_order=None),
        E("pochhammer.qinverse", "(x;q^{-1})_{n}=q^{-\\binom{n}{2}}(-x)^{n}(x^{-1};q)_{n}",
          "the |q|>1 convention as a Laurent identity", _qinverse_convention, (), {"n": (0, 8)},
          default_order=None),
        E("binomial.exponents", "we will use the identities for binomial coefficients",
          "C(n+k,2) and C(n-k,2) expansions", _binomial_exponents, (), {"n": (0, 20), "k": (0, 20)},
          default_order=None),
        E("pascal.both", "The $q$-binomial verifies that", "both Pascal rules and the defining quotient",
          _pascal, (), {"n": (0, 12)}, default_order=None),
        E("pascal.qinverse_rep", "The $q$-binomial verifies that",
          "[n k] = (q^-n;q)_k/(q;q)_k (-q^n)^k q^-C(k,2)", _pascal_qinverse, (), {"n": (0, 8)},
          default_order=None),
        E("qbinomial.theorem", "we will frequently use the $q$-binomial theorem",
          "1phi0(a;q,z) = (az;q)_inf/(z;q)_inf", _qbinomial_theorem, ("z",), default_order=10),
        E("exp.specializations", "Some deformed $q$-exponential functions are",
          "e_q(z,1), e_q(-z,q), e_q(qz,q^2), the u=0 case and the 1Phi0 form", _exp_specializations, ("z",),
          default_order=10),
        E("exton.exp_phi11", "is the Exton $q$-exponential function",
          "e_q(z,sqrt q) = 1phi1(0;-sqrt q;sqrt q,-z)", _exton_exp, ("z",), required_scale=2, default_order=10),
        E("sokal.functional_eq", "satisfies the functional equation",
          "e_q(z,u) - e_q(qz,u) - z e_q(uz,u) = 0", _sokal, ("z",), default_order=10),
        E("hn.generating", "has the following generating function",
          "sum h_n(x) t^n/(q;q)_n = 1/(t,xt;q)_inf", _hn_generating, ("t",)),
        E("hn.mehler", "The Mehler's formula for", "Mehler formula for h_n", _hn_mehler, ("t",)),
        E("hn.rogers", "The Rogers formula for", "Rogers formula for h_n", _hn_rogers, ("t", "s"), default_order=6),
        E("dq.leibniz", "the Leibniz rule for", "q-Leibniz rule on random polynomial pairs, n <= 4", _leibniz, (),
          {"trial": (0, 24)}, default_order=None,
          notes="D_q^{n-k}{g(q^k x)} is the operator applied to the rescaled function; "
                "the factor q^{k(k-n)} undoes the chain-rule power."),
        E("dq.monomial", "D_{q}^nx^{k}=\\frac{(q;q)_{k}}{(q;q)_{k-n}}x^{k-n}",
          "closed form of D_q^n x^k", _dq_monomial, (), {"k": (0, 8), "n": (0, 8)}, default_order=None),
        E("dq.kder_basic", "following basic identity from",
          "D_q^k e_q(ax,u) = a^k u^C(k,2) e_q(au^k x,u)", _kder_basic, ("x",), {"k": (0, 4)}, default_order=10),
        E("dq.product.general", "From the Leibniz formula",
          "D_q^n of e_q(ax,u) e_q(bx,v)", _product_general, ("x",), {"n": (0, 3)}, default_order=6),
        E("dq.product.iden6", "If $u=v=q$, then", "D_q^n (ax,bx;q)_inf", iden6_pair, ("x",), {"n": (0, 3)},
          default_order=6,
          notes="Verified with a factor (-1)^n on the right side: (ax;q)_inf = e_q(-ax,q), so the "
                "general product formula contributes (-a)^k(-b)^(n-k). The display without it is "
                "registered as errata.dq.product.iden6."),
        E("dq.product.iden7", "If $u=q$ and $v=1$ then", "D_q^n (-ax;q)_inf/(bx;q)_inf", _iden7, ("x",),
          {"n": (0, 3)}, default_order=6),
        E("dq.product.iden8", "If $u=v=1$, then", "D_q^n 1/(ax,bx;q)_inf", _iden8, ("x",), {"n": (0, 3)},
          default_order=6),
        E("phi.deformed_reduction", "Therefore, a deformed basic hypergeometric series generalizes",
          "r+1Phi_r(..,0;..;q,q,z) = r phi r(..;..;q,-z) for r = 1, 2", _deformed_reduction, ("z",)),
        E("phi21.dq_pow", "which can be checked directly", "D_q^n of the deformed 2Phi1", _phi21_dq_pow,
          ("z",), {"n": (0, 3)},
          notes="The 2Phi1 is built with (c;q)_n in the denominator, as the proof of the q-difference "
                "equation requires; the defining display divides by (b;q)_n (see errata.phi21.definition)."),
        E("phi21.qdiff", "satisfies the $q$-difference equation",
          "q-difference equation of the deformed 2Phi1", phi21_qdiff_residual, ("z",), default_order=10,
          notes="D_q^2 f(uz) and D_q f(uz) are read as D_q applied to g(z) = f(uz); this reading "
                "reproduces the u^n z^n coefficients of the proof. Residual compared with zero."),
        E("gauss2F1.limit_eq", "tends to the functional-differential equation",
          "q -> 1 limit equation for the deformed 2F1", _limit_eq, ("z",), default_order=8,
          notes="f''(uz) and f'(uz) are derivatives of g(z) = f(uz), matching the q-difference reading."),
    ]
