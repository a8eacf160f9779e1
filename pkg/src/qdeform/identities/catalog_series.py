"""Generating functions, Heine, Mehler and Rogers type formulas, and the
Rogers-Ramanujan and Exton operators."""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .. import qkernel as K
from ..algebra.poly import LaurentPoly
from ..algebra.rational import RationalExpr
from ..operators import OperatorSpec, apply_operator
from ..special import P, eq_deformed, mono_pow, named_polys, phi, r_poly, rn, rr_exp
from .common import C2, inf_ratio, multi_sum
from .engine import Check, IdentitySpec

ONE = LaurentPoly.const(1)
HALF = Fraction(1, 2)
x, y, z, w = P("x"), P("y"), P("z"), P("w")
t, s, u, v = P("t"), P("s"), P("u"), P("v")
a, b, d = P("a"), P("b"), P("d")


def _q(bc, e=1, coeff=1) -> LaurentPoly:
    return LaurentPoly.qpow(e, bc.ctx, coeff)


def _gen(f, poly_of_n, var):
    """sum_n poly_of_n(n) var^n / (q;q)_n; the n-th term carries var^n."""
    return multi_sum(f, [var], lambda n: RationalExpr(poly_of_n(n)) * f.inv_qq(n))


def _mono(f, c, k):
    """c / (q;q)_k as a series; c may carry small symbols."""
    return f.series(c).scale(f.inv_qq(k))


def exton_phi11(f, bc, arg, literal_base: bool = False):
    """E_q(Z) written as 1phi1(0; -sqrt q; sqrt q, -Z); ``literal_base`` uses base q."""
    return phi([0], [-_q(bc, HALF)], -arg, f, base=1 if literal_base else HALF)


# -- generalized q-binomial theorem ------------------------------------------------


def _genfunc_v(bc):
    f = bc.frame
    lhs = _gen(f, lambda n: mono_pow(v, C2(n)) * rn(n, x, y, u, bc.ctx), "z")
    rhs = f.sum(lambda k: _mono(f, mono_pow(u * v, C2(k)) * (y * z) ** k, k)
                * eq_deformed(mono_pow(v, k) * x * z, v, f), 1)
    return lhs, rhs


def _genfunc_qbinomial(bc):
    f = bc.frame
    lhs = _gen(f, lambda n: rn(n, x, y, u, bc.ctx), "z")
    return lhs, eq_deformed(y * z, u, f) * f.inv_inf(x * z)


def _genfunc_named(kind):
    def build(bc):
        f = bc.frame
        lhs = _gen(f, lambda n: named_polys(kind, n, x, y, ctx=bc.ctx), "z")
        if kind == "rogers_szego_h":
            rhs = inf_ratio(f, [], [z, x * z])
        elif kind == "cauchy_P":
            rhs = inf_ratio(f, [y * z], [x * z])
        elif kind == "exton_E":
            yield Check("E_q(yz)/(xz)_inf", lhs, eq_deformed(y * z, _q(bc, HALF), f) * f.inv_inf(x * z))
            rhs = f.inv_inf(x * z) * exton_phi11(f, bc, y * z)
        else:
            rhs = rr_exp(x * z, f) * f.inv_inf(z)
        yield Check("", lhs, rhs)

    return build


def _rr_product(bc, residues, order):
    """1/prod_{r in residues} (q^r;q^5)_inf through q^order."""
    prod = ONE
    for r in residues:
        prod = K.truncate_q(prod * K.qpochhammer_qpower_truncated(r, 5, order, bc.ctx), order, bc.ctx)
    return K.q_series_inverse(prod, order, bc.ctx)


def _rr_products(shift):
    """sum_n S_n(q^shift/x) x^n/(q;q)_n = R_q(q^shift)/(x;q)_inf, read coefficientwise in x."""
    residues = (1, 4) if shift == 0 else (2, 3)

    def build(bc):
        N, ctx = bc.order, bc.ctx
        product = _rr_product(bc, residues, N)
        rr_sum = LaurentPoly()
        k = 0
        while k * k <= N:
            c = K.q_series_inverse(K.qpochhammer(_q(bc), k, ctx), N, ctx)
            rr_sum = rr_sum + K.truncate_q(_q(bc, k * k + shift * k) * c, N, ctx)
            k += 1
        yield Check("sum = product", K.truncate_q(rr_sum, N, ctx), product)
        for m in range(4):
            # x^m coefficient: S_n contributes its x^(n-m) coefficient times q^(shift*(n-m))
            lhs = LaurentPoly()
            n = m
            while (n - m) ** 2 <= N:
                coeff = named_polys("stieltjes_wigert_S", n, ctx=ctx).split(("x",)).get((n - m,), LaurentPoly())
                inv = K.q_series_inverse(K.qpochhammer(_q(bc), n, ctx), N, ctx)
                lhs = lhs + K.truncate_q(coeff * _q(bc, shift * (n - m)) * inv, N, ctx)
                n += 1
            inv_m = K.q_series_inverse(K.qpochhammer(_q(bc), m, ctx), N, ctx)
            yield Check(f"x^{m} coefficient", K.truncate_q(lhs, N, ctx),
                        K.truncate_q(product * inv_m, N, ctx))

    return build


def _genfunc_v_eq_q(bc):
    f = bc.frame
    lhs = _gen(f, lambda n: _q(bc, C2(n), (-1) ** n) * rn(n, x, y, u, bc.ctx), "z")
    return lhs, f.inf(x * z) * phi([0], [x * z], y * z, f, u=u)


def _genfunc_v_q_u_qinv(bc):
    f = bc.frame
    lhs = _gen(f, lambda n: _q(bc, C2(n)) * rn(n, x, y, _q(bc, -1), bc.ctx), "z")
    return lhs, f.inv_inf(y * z) * phi([y * z], [0], -x * z, f)


# -- Heine -----------------------------------------------------------------------


def _heine_rhs(bc, poly_of_n):
    f = bc.frame
    pre = inf_ratio(f, [b, a * z], [z])
    tail = f.sum(lambda n: f.series(poly_of_n(n) * b ** n).scale(f.inv_qq(n))
                 * f.poch(z, n) * f.inv_poch(a * z, n), 1)
    return pre * tail


def _heine_generalized(bc):
    f = bc.frame
    lhs = f.sum(lambda n: eq_deformed(b * d * _q(bc, n), u, f) * f.poch(a, n) * f.poch(b, n)
                * _mono(f, z ** n, n), 1)
    return lhs, _heine_rhs(bc, lambda n: rn(n, 1, d, u, bc.ctx))


def _heine_phi32(bc):
    f = bc.frame
    lhs = phi([a, b, b * d], [0, 0], z, f)
    rhs = _heine_rhs(bc, lambda n: named_polys("rogers_szego_h", n, d, ctx=bc.ctx)) * f.inf(b * d)
    return lhs, rhs


def _heine_rr(bc):
    f = bc.frame
    lhs = f.sum(lambda n: rr_exp(b * d * _q(bc, n), f) * f.poch(a, n) * f.poch(b, n) * _mono(f, z ** n, n), 1)
    return lhs, _heine_rhs(bc, lambda n: named_polys("stieltjes_wigert_S", n, d, ctx=bc.ctx))


def _heine_rn_rep(bc):
    f = bc.frame
    lhs = f.sum(lambda n: f.series(rn(n, 1, x, u, bc.ctx) * b ** n).scale(f.inv_qq(n))
                * f.poch(z, n) * f.inv_poch(a * z, n), 1)
    rhs = inf_ratio(f, [z], [a * z, b]) * f.sum(
        lambda n: eq_deformed(b * x * _q(bc, n), u, f) * f.poch(a, n) * f.poch(b, n) * _mono(f, z ** n, n), 1)
    return lhs, rhs


# -- Mehler ------------------------------------------------------------------------


def _mehler_generalized(bc):
    f = bc.frame
    lhs = _gen(f, lambda n: rn(n, x, y, u, bc.ctx) * rn(n, z, w, v, bc.ctx), "t")

    def term(k):
        c = mono_pow(u * v, C2(k)) * (t * w * y) ** k
        return (_mono(f, c, k) * f.poch(t * z * x, k) * eq_deformed(t * w * x * mono_pow(v, k), v, f)
                * eq_deformed(t * y * z * mono_pow(u, k), u, f))

    return lhs, f.inv_inf(t * z * x) * f.sum(term, 1)


def sa_pair(bc, literal: bool = False):
    """Srivastava-Agarwal type: sum R_n(x,y;u) (a;q)_n t^n/(q;q)_n.

    ``literal`` is the displayed right side with (-ty;q) factors and e_q(-atxv^k, v).
    """
    f = bc.frame
    lhs = _gen(f, lambda n: rn(n, x, y, u, bc.ctx) * K.qpochhammer(a, n, bc.ctx), "t")
    if literal:
        def term(k):
            c = mono_pow(u * _q(bc), C2(k)) * (-a * t * y) ** k
            return (_mono(f, c, k) * f.poch(t * x, k) * f.inv_poch(-t * y, k)
                    * eq_deformed(-a * t * x * mono_pow(v, k), v, f))

        return lhs, inf_ratio(f, [-t * y], [t * x]) * f.sum(term, 1)

    def term(k):
        c = mono_pow(u * _q(bc), C2(k)) * (-a * t * y) ** k
        return (_mono(f, c, k) * f.poch(t * x, k) * f.inv_poch(a * t * x, k)
                * eq_deformed(t * y * mono_pow(u, k), u, f))

    return lhs, inf_ratio(f, [a * t * x], [t * x]) * f.sum(term, 1)


def _mehler_sa_hn(bc):
    f = bc.frame
    lhs = _gen(f, lambda n: named_polys("rogers_szego_h", n, x, ctx=bc.ctx) * K.qpochhammer(y, n, bc.ctx), "t")
    return lhs, inf_ratio(f, [t * y], [t, t * x]) * phi([t], [t * y], t * x * y, f)


def phi12_pair(bc, literal: bool = False):
    f = bc.frame
    arg = -t * x * y if literal else t * x * y
    lhs = phi([t], [t * x, t * y], arg, f)
    return lhs, inf_ratio(f, [t], [t * x, t * y]) * phi([x, y], [0], t, f)


# -- Rogers ------------------------------------------------------------------------


def _rogers_lhs(bc, coeff):
    """sum_{n,m} coeff(n, m) t^n s^m / ((q;q)_n (q;q)_m)."""
    f = bc.frame
    return multi_sum(f, ["t", "s"], lambda n, m: RationalExpr(coeff(n, m)) * f.inv_qq(n) * f.inv_qq(m))


def _rogers_generalized(bc):
    f = bc.frame
    lhs = _rogers_lhs(bc, lambda n, m: rn(n + m, x, y, u, bc.ctx) * mono_pow(v, C2(n)) * mono_pow(w, C2(m)))

    def coeff(k, n):
        c = (mono_pow(u * v, C2(k)) * mono_pow(u * w, C2(n)) * y ** k * (mono_pow(u, k) * y) ** n)
        series = (eq_deformed(t * mono_pow(v, k) * x, v, f)
                  * eq_deformed(s * _q(bc, k) * mono_pow(w, n) * x, w, f))
        return series.scale(RationalExpr(c) * f.inv_qq(k) * f.inv_qq(n))

    return lhs, multi_sum(f, ["t", "s"], coeff)


def _rogers_saad(bc):
    f = bc.frame
    lhs = _rogers_lhs(bc, lambda n, m: named_polys("homogeneous_r", n + m, x, y, ctx=bc.ctx))
    return lhs, inf_ratio(f, [s * t * x * y], [t * x, s * x, s * y, t * y])


def _rogers_u_q(bc):
    f = bc.frame
    lhs = _rogers_lhs(bc, lambda n, m: K.qpochhammer(x, n + m, bc.ctx))
    return lhs, inf_ratio(f, [s * x], [t, s]) * phi([s], [s * x], t * x, f)


def _rogers_v1_wq(bc):
    f = bc.frame
    lhs = _rogers_lhs(bc, lambda n, m: rn(n + m, x, y, u, bc.ctx) * _q(bc, C2(m)))

    def term(k):
        c = mono_pow(u, C2(k)) * (t * y) ** k
        inner = phi([0], [-s * x * _q(bc, k)], -mono_pow(u, k) * s * y, f, u=u)
        return _mono(f, c, k) * f.inv_poch(-s * x, k) * inner

    return lhs, inf_ratio(f, [-s * x], [t * x]) * f.sum(term, 1)


def _rogers_u1_s_neg(bc):
    f = bc.frame
    lhs = _rogers_lhs(bc, lambda n, m: named_polys("homogeneous_r", n + m, x, y, ctx=bc.ctx)
                      * _q(bc, C2(m), (-1) ** m))

    def term(k):
        inner = phi([0], [s * x * _q(bc, k)], s * y, f)
        return _mono(f, (t * y) ** k, k) * f.inv_poch(s * x, k) * inner

    return lhs, inf_ratio(f, [s * x], [t * x]) * f.sum(term, 1)


def _rogers_u_q_s_neg(bc):
    f = bc.frame
    lhs = _rogers_lhs(bc, lambda n, m: K.qpochhammer(x, n + m, bc.ctx) * _q(bc, C2(m), (-1) ** m))

    def term(k):
        c = _q(bc, C2(k)) * (-t * x) ** k
        inner = phi([], [s * _q(bc, k)], _q(bc, k) * s * x, f)
        return _mono(f, c, k) * f.inv_poch(s, k) * inner

    return lhs, inf_ratio(f, [s], [t]) * f.sum(term, 1)


def rogers_u_qinv_pair(bc, literal: bool = False):
    f = bc.frame
    lhs = _rogers_lhs(bc, lambda n, m: rn(n + m, x, y, _q(bc, -1), bc.ctx) * _q(bc, C2(m)))
    e = 1 if literal else -1

    def term(k):
        c = _q(bc, -C2(k)) * (t * y) ** k
        inner = phi([0, 0], [-s * x * _q(bc, k)], _q(bc, e * k) * s * y, f)
        return _mono(f, c, k) * f.inv_poch(-s * x, k) * inner

    return lhs, inf_ratio(f, [-s * x], [t * x]) * f.sum(term, 1)


# -- Rogers-Ramanujan operator ------------------------------------------------------


def _rr_op_on_exp(bc):
    f = bc.frame
    op = OperatorSpec.rogers_ramanujan("y", ctx=bc.ctx)
    lhs = apply_operator(op, f.inv_inf(a * x), bc.ctx)
    return lhs, rr_exp(a * y, f) * f.inv_inf(a * x)


def _rr_op_on_product(bc):
    f = bc.frame
    op = OperatorSpec.rogers_ramanujan("y", ctx=bc.ctx)
    base = f.inv_inf(a * x) * f.inv_inf(b * x)
    lhs = apply_operator(op, base, bc.ctx)
    rhs = base * f.sum(lambda k: _mono(f, _q(bc, k * k) * (a * y) ** k, k) * f.poch(b * x, k)
                       * rr_exp(b * _q(bc, 2 * k) * y, f), 1)
    return lhs, rhs


def rr_phi45_pair(bc, literal: bool = False):
    """sum q^(n^2) R_n(x,y;1,q^-2) z^n/(q;q)_n against its 4phi5 form.

    The four upper parameters +-sqrt(c), +-sqrt(cq) multiply out to (c;q)_2m,
    which is how the right side is built.  Corrected: c = qyz, argument q*xz.
    Literal: c = yz, argument q^2*xz.
    """
    f = bc.frame
    lhs = _gen(f, lambda n: _q(bc, n * n) * r_poly(n, x, y, 1, _q(bc, -2), bc.ctx), "z")
    c = y * z if literal else _q(bc) * y * z
    arg = (_q(bc, 2) if literal else _q(bc)) * x * z

    # 4phi5 with five zero lower parameters: [(-1)^m q^C(m,2)]^2 = q^(m^2-m)
    def term(m):
        return _mono(f, _q(bc, m * m - m) * arg ** m, m) * f.poch(c, 2 * m)

    return lhs, f.inv_inf(c) * f.sum(term, 1)


def _rr_mehler_h_sw(bc):
    f = bc.frame
    lhs = _gen(f, lambda n: named_polys("rogers_szego_h", n, x, ctx=bc.ctx)
               * named_polys("stieltjes_wigert_S", n, y, ctx=bc.ctx), "t")
    rhs = inf_ratio(f, [], [t, t * x]) * f.sum(
        lambda k: _mono(f, _q(bc, k * k) * (t * x * y) ** k, k) * f.poch(t, k) * rr_exp(t * y * _q(bc, 2 * k), f), 1)
    return lhs, rhs


def _rr_mehler_sa_sw(bc):
    f = bc.frame
    lhs = _gen(f, lambda n: named_polys("stieltjes_wigert_S", n, y, ctx=bc.ctx) * K.qpochhammer(x, n, bc.ctx), "t")

    def term(k):
        c = _q(bc, Fraction(3 * k * k - k, 2)) * (-t * x * y) ** k
        return _mono(f, c, k) * f.poch(t, k) * f.inv_poch(t * x, k) * rr_exp(t * y * _q(bc, 2 * k), f)

    return lhs, inf_ratio(f, [t * x], [t]) * f.sum(term, 1)


def _rr_mehler_sw_sw(bc):
    f = bc.frame
    lhs = _gen(f, lambda n: named_polys("stieltjes_wigert_S", n, x, ctx=bc.ctx)
               * named_polys("stieltjes_wigert_S", n, y, ctx=bc.ctx), "t")

    def term(k):
        c = _q(bc, 2 * k * k) * (t * x * y) ** k
        return (_mono(f, c, k) * f.poch(t, k) * rr_exp(t * y * _q(bc, 2 * k), f)
                * rr_exp(t * x * _q(bc, 2 * k), f))

    return lhs, f.inv_inf(t) * f.sum(term, 1)


def rr_rogers_pair(bc, literal: bool = False):
    f = bc.frame
    lhs = _rogers_lhs(bc, lambda n, m: named_polys("stieltjes_wigert_S", n + m, x, ctx=bc.ctx))
    var = y if literal else x

    def term(k):
        c = _q(bc, k * k) * (t * var) ** k
        return _mono(f, c, k) * f.poch(s, k) * rr_exp(_q(bc, 2 * k) * s * var, f)

    return lhs, inf_ratio(f, [], [t, s]) * f.sum(term, 1)


# -- Exton operator (base sqrt q) -----------------------------------------------------


def exton_on_exp_pair(bc, literal: bool = False):
    f = bc.frame
    op = OperatorSpec.exton("y", ctx=bc.ctx)
    lhs = apply_operator(op, f.inv_inf(a * x), bc.ctx)
    yield Check("E_q(ay)/(ax)_inf", lhs, eq_deformed(a * y, _q(bc, HALF), f) * f.inv_inf(a * x))
    arg = a * x if literal else a * y
    yield Check("1phi1 form", lhs, f.inv_inf(a * x) * exton_phi11(f, bc, arg))


def _exton_on_product(bc):
    f = bc.frame
    op = OperatorSpec.exton("y", ctx=bc.ctx)
    base = f.inv_inf(a * x) * f.inv_inf(b * x)
    lhs = apply_operator(op, base, bc.ctx)

    def term(k):
        c = _q(bc, Fraction(C2(k), 2)) * (a * y) ** k
        return _mono(f, c, k) * f.poch(b * x, k) * exton_phi11(f, bc, b * _q(bc, Fraction(k, 2)) * y)

    return lhs, base * f.sum(term, 1)


def exton_phi54_pair(bc, literal: bool = False):
    """Even and odd parts of sum sqrt(q)^C(n,2) R_n(x,y;1,q^-1/2) z^n/(q;q)_n as two 5Phi4.

    Corrected: yz (resp. sqrt(q) yz) is the nonzero upper parameter.
    Literal: it sits among the lower parameters.
    """
    f = bc.frame
    h = _q(bc, HALF)
    lhs = _gen(f, lambda n: _q(bc, Fraction(C2(n), 2)) * r_poly(n, x, y, 1, _q(bc, -HALF), bc.ctx), "z")
    u2 = _q(bc, 2)
    arg = x * x * z * z

    def part(c, lows, scale_arg):
        if literal:
            return phi([0] * 5, lows + [c], scale_arg * arg, f, u=u2)
        return phi([c, 0, 0, 0, 0], lows + [0], scale_arg * arg, f, u=u2)

    even = f.inv_inf(y * z) * part(y * z, [h, -h, -_q(bc)], h)
    odd_pre = f.series(x * z).scale(RationalExpr.fraction(ONE, [ONE - _q(bc)])) * f.inv_inf(h * y * z)
    odd = odd_pre * part(h * y * z, [_q(bc, Fraction(3, 2)), -_q(bc, Fraction(3, 2)), -_q(bc)], _q(bc, Fraction(3, 2)))
    return lhs, even + odd


def exton_mehler_h_pair(bc, literal: bool = False):
    f = bc.frame
    lhs = _gen(f, lambda n: named_polys("rogers_szego_h", n, x, ctx=bc.ctx)
               * named_polys("exton_E", n, y, z, ctx=bc.ctx), "t")

    def term(k):
        c = _q(bc, Fraction(C2(k), 2)) * (t * z * x) ** k
        return (_mono(f, c, k) * f.poch(t * y, k)
                * exton_phi11(f, bc, t * z * _q(bc, Fraction(k, 2)), literal_base=literal))

    return lhs, inf_ratio(f, [], [t * y, t * x * y]) * f.sum(term, 1)


def exton_mehler_sa_pair(bc, literal: bool = False):
    f = bc.frame
    lhs = _gen(f, lambda n: K.qpochhammer(x, n, bc.ctx) * named_polys("exton_E", n, y, z, ctx=bc.ctx), "t")

    def term(k):
        c = _q(bc, Fraction(3 * C2(k), 2)) * (-t * z * x) ** k
        return (_mono(f, c, k) * f.poch(t * y, k) * f.inv_poch(t * x * y, k)
                * exton_phi11(f, bc, t * z * _q(bc, Fraction(k, 2)), literal_base=literal))

    return lhs, inf_ratio(f, [t * x * y], [t * y]) * f.sum(term, 1)


def exton_mehler_ee_pair(bc, literal: bool = False):
    f = bc.frame
    lhs = _gen(f, lambda n: named_polys("exton_E", n, x, y, ctx=bc.ctx)
               * named_polys("exton_E", n, z, w, ctx=bc.ctx), "t")

    def term(k):
        c = _q(bc, C2(k)) * (t * w * y) ** k
        hk = _q(bc, Fraction(k, 2))
        return (_mono(f, c, k) * f.poch(t * x * z, k)
                * exton_phi11(f, bc, t * x * w * hk, literal_base=literal)
                * exton_phi11(f, bc, t * y * z * hk, literal_base=literal))

    return lhs, f.inv_inf(t * x * z) * f.sum(term, 1)


def exton_rogers_pair(bc, literal: bool = False):
    f = bc.frame
    lhs = _rogers_lhs(bc, lambda n, m: named_polys("exton_E", n + m, x, y, ctx=bc.ctx))

    def term(k):
        c = _q(bc, Fraction(C2(k), 2)) * (t * y) ** k
        return (_mono(f, c, k) * f.poch(s * x, k)
                * exton_phi11(f, bc, s * y * _q(bc, Fraction(k, 2)), literal_base=literal))

    return lhs, inf_ratio(f, [], [t * x, s * x]) * f.sum(term, 1)


def entries() -> List[IdentitySpec]:
    E = IdentitySpec
    gen_anchor = "Some specializations of this generalization are"
    base_note = ("E_q(Z) = 1phi1(0;-sqrt q;sqrt q,-Z) needs base sqrt(q); the display writes base q, which fails "
                 "(errata.{id}).")
    return [
        E("genfunc.v", "From Theorem \\ref{theo_opeE_exp}",
          "sum v^C(n,2) R_n(x,y;u) z^n/(q;q)_n", _genfunc_v, ("z",), default_order=8),
        E("genfunc.qbinomial", "Generalized $q$-binomial theorem",
          "sum R_n(x,y;u) z^n/(q;q)_n = e_q(yz,u)/(xz;q)_inf", _genfunc_qbinomial, ("z",), default_order=8),
        E("genfunc.h", gen_anchor, "Rogers-Szego generating function", _genfunc_named("rogers_szego_h"), ("z",)),
        E("genfunc.cauchy", gen_anchor, "Cauchy polynomial generating function", _genfunc_named("cauchy_P"),
          ("z",)),
        E("genfunc.exton", gen_anchor, "Exton polynomial generating function", _genfunc_named("exton_E"), ("z",),
          required_scale=2),
        E("genfunc.sw", gen_anchor, "Stieltjes-Wigert generating function", _genfunc_named("stieltjes_wigert_S"),
          ("z",)),
        E("genfunc.rr_products.first", "are the Rogers-Ramanujan functions",
          "sum S_n(1/x) x^n/(q;q)_n = R_q(1)/(x;q)_inf, product side", _rr_products(0), (),
          default_order=30, min_order=30,
          notes="Pure q-series through q^order. The x^m coefficients are compared for m < 4. The display "
                "divides by (z;q)_inf after setting xz = 1; read as (x;q)_inf."),
        E("genfunc.rr_products.second", "are the Rogers-Ramanujan functions",
          "sum S_n(q/x) x^n/(q;q)_n = R_q(q)/(x;q)_inf, product side", _rr_products(1), (),
          default_order=30, min_order=30,
          notes="Pure q-series through q^order; (z;q)_inf in the display read as (x;q)_inf."),
        E("genfunc.v_eq_q", "If $v=q$ in Theorem", "v = q: (xz;q)_inf 1Phi1(0;xz;q,u,yz)", _genfunc_v_eq_q,
          ("z",)),
        E("genfunc.v_q_u_qinv", "If $v=q$ and $u=q^{-1}$", "v = q, u = 1/q: 1phi1(yz;0;q,-xz)/(yz;q)_inf",
          _genfunc_v_q_u_qinv, ("z",)),
        E("heine.generalized", "Generalized Heine's transformation formula",
          "sum e_q(cq^n,u)(a,b;q)_n z^n/(q;q)_n with c = b*d", _heine_generalized, ("z", "b", "d"),
          default_order=6, substitutions={"c": "b*d"},
          notes="c/b must be a polynomial argument, so c = b*d with b and d small."),
        E("heine.phi32", "{}_{3}\\phi_{2}",
          "3phi2(a,b,c;0,0;q,z) through h_n(c/b) with c = b*d", _heine_phi32, ("z", "b", "d"),
          default_order=6, substitutions={"c": "b*d"},
          notes="With three upper and two lower parameters the factor [(-1)^n q^C(n,2)]^(1+s-r) is 1, so the "
                "conventional 3phi2 with lower (0,0) is exactly sum (a,b,c;q)_n z^n/(q;q)_n; no relabeling needed."),
        E("heine.rr", "\\mathcal{R}_{q}(cq^{n})",
          "sum R_q(cq^n)(a,b;q)_n z^n/(q;q)_n through S_n(c/b) with c = b*d", _heine_rr, ("z", "b", "d"),
          default_order=6, substitutions={"c": "b*d"}),
        E("heine.rn_representation", "we can deduce the following representation of the polynomials",
          "sum R_n(1,x;u)(z;q)_n b^n/((az;q)_n(q;q)_n)", _heine_rn_rep, ("z", "b"), default_order=6),
        E("mehler.generalized", "Mehler's formula", "sum R_n(x,y;u) R_n(z,w;v) t^n/(q;q)_n",
          _mehler_generalized, ("t",), default_order=6),
        E("mehler.srivastava_agarwal", "The representation type Srivastava-Agarwal",
          "sum R_n(x,y;u)(a;q)_n t^n/(q;q)_n", sa_pair, ("t",), default_order=6,
          substitutions={"z": "1", "w": "-a", "v": "q"},
          notes="Verified as (atx)_inf/(tx)_inf sum (uq)^C(k,2)(-aty)^k(tx)_k/((atx)_k(q)_k) e_q(tyu^k,u), "
                "the Mehler formula at z = 1, w = -a, v = q. The display's (-ty) factors and "
                "e_q(-atxv^k,v) fail (errata.mehler.srivastava_agarwal)."),
        E("mehler.sa_hn", "following result of Srivastava and Agarwal",
          "sum h_n(x)(y;q)_n t^n/(q;q)_n", _mehler_sa_hn, ("t",), default_order=6),
        E("mehler.phi12_transform", "Transformation formula for ${}_{1}\\phi_{2}$",
          "1phi2(t;tx,ty;q,txy) as a 2phi1", phi12_pair, ("t",), default_order=6,
          notes="The 1phi2 argument is txy; the displayed -txy fails (errata.mehler.phi12_transform)."),
        E("rogers.generalized", "Rogers formula", "double sum of R_{n+m}(x,y;u) v^C(n,2) w^C(m,2)",
          _rogers_generalized, ("t", "s"), default_order=6),
        E("rogers.saad", "If $u=v=w=1$, we obtain the following results in",
          "double sum of r_{n+m}(x,y)", _rogers_saad, ("t", "s"), default_order=6),
        E("rogers.u_q_v1_w1", "If $u=q$ and $v=w=1$ in Theorem", "double sum of (x;q)_{n+m}", _rogers_u_q,
          ("t", "s"), default_order=6),
        E("rogers.v1_wq", "If $v=1,w=q$, then", "v = 1, w = q: sum of 1Phi1", _rogers_v1_wq, ("t", "s"),
          default_order=6),
        E("rogers.u1_s_neg", "Set $u=1$ and $s\\mapsto-s$", "u = 1, s -> -s", _rogers_u1_s_neg, ("t", "s"),
          default_order=6),
        E("rogers.u_q_s_neg", "Set $u=q$ and $s\\mapsto-s$", "u = q, s -> -s: sum of 0phi1",
          _rogers_u_q_s_neg, ("t", "s"), default_order=6,
          notes="Verifies as displayed, with 0phi1 argument +q^k sx."),
        E("rogers.u_qinv", "If $u=q^{-1}$ in Corollary", "u = 1/q: sum of 2phi1(0,0;-sxq^k;q,q^-k sy)",
          rogers_u_qinv_pair, ("t", "s"), default_order=6,
          notes="At u = 1/q the 1Phi1 argument -u^k sy becomes -q^-k sy, so the 2phi1 argument is q^-k sy; "
                "the displayed q^k sy fails (errata.rogers.u_qinv)."),
        E("rr_op.on_exp", "The Rogers-Ramanujan operator", "R(yD_q) 1/(ax;q)_inf", _rr_op_on_exp, ("x", "y"),
          default_order=6),
        E("rr_op.on_product", "The Rogers-Ramanujan operator", "R(yD_q) 1/(ax,bx;q)_inf", _rr_op_on_product,
          ("x", "y"), default_order=6),
        E("rr_op.phi45", "\\sqrt{yz},-\\sqrt{yz}", "sum q^(n^2) R_n(x,y;1,q^-2) z^n/(q;q)_n as a 4phi5",
          rr_phi45_pair, ("z",), default_order=6,
          notes="q^(n^2) splits as q^(m^2+2mk+k) with n = m+k, so the inner sum is 1/(q^(2m+1)yz;q)_inf. "
                "Verified: 1/(qyz;q)_inf sum q^(m^2)(xz)^m(qyz;q)_2m/(q;q)_m, i.e. "
                "4phi5(+-sqrt(qyz),+-q sqrt(yz);0^5;q,qxz)/(qyz;q)_inf. The display's (yz;q) and q^2 xz fail "
                "(errata.rr_op.phi45)."),
        E("rr_op.mehler.h_sw", "If $u=1$, $v=q^2$, $x=z=1$, $y=x$, $w=qy$, then",
          "sum h_n(x) S_n(y) t^n/(q;q)_n", _rr_mehler_h_sw, ("t",), default_order=6),
        E("rr_op.mehler.sa_sw", "the representation type Srivastava-Agarwal of",
          "sum S_n(y)(x;q)_n t^n/(q;q)_n", _rr_mehler_sa_sw, ("t",), default_order=6),
        E("rr_op.mehler.sw_sw", "If $u=q^2$, $v=q^2$, $x=z=1$, $y=qx$, $w=qy$, then",
          "sum S_n(x) S_n(y) t^n/(q;q)_n", _rr_mehler_sw_sw, ("t",), default_order=6),
        E("rr_op.rogers.sw", "If $u=q^2$, $v=w=1$, then", "double sum of S_{n+m}(x)", rr_rogers_pair,
          ("t", "s"), default_order=6,
          notes="The right side involves x only: (tx)^k and R_q(q^2k sx). The display's y fails "
                "(errata.rr_op.rogers.sw)."),
        E("exton_op.on_exp", "The Exton operator", "E(yD_q) 1/(ax;q)_inf", exton_on_exp_pair, ("x", "y"),
          required_scale=2, default_order=6,
          notes="The 1phi1 argument is -ay; the displayed -ax fails (errata.exton_op.on_exp)."),
        E("exton_op.on_product", "The Exton operator", "E(yD_q) 1/(ax,bx;q)_inf", _exton_on_product,
          ("x", "y"), required_scale=2, default_order=6),
        E("exton_op.phi54", "{}_{5}\\Phi_{4}",
          "sum sqrt(q)^C(n,2) R_n(x,y;1,q^-1/2) z^n/(q;q)_n as two 5Phi4", exton_phi54_pair, ("z",),
          required_scale=2, default_order=6,
          notes="The factors (yz;q)_m and (sqrt(q) yz;q)_m sit in the numerators, so yz and sqrt(q) yz are "
                "upper parameters; with them in the lower row the display fails (errata.exton_op.phi54)."),
        E("exton_op.mehler.h_E", "If $u=1$, $v=\\sqrt{q}$, $x=1$, $y=x$, $z=y$ $w=z$, then",
          "sum h_n(x) E_n(y,z) t^n/(q;q)_n", exton_mehler_h_pair, ("t",), required_scale=2, default_order=6,
          notes=base_note.format(id="exton_op.mehler.h_E")),
        E("exton_op.mehler.sa_E", "If $u=q$, $v=\\sqrt{q}$, $x=1$, $y=-x$, $z=y$, $w=z$, then",
          "sum (x;q)_n E_n(y,z) t^n/(q;q)_n", exton_mehler_sa_pair, ("t",), required_scale=2, default_order=6,
          notes=base_note.format(id="exton_op.mehler.sa_E")),
        E("exton_op.mehler.E_E", "If $u=v=\\sqrt{q}$, then", "sum E_n(x,y) E_n(z,w) t^n/(q;q)_n",
          exton_mehler_ee_pair, ("t",), required_scale=2, default_order=6,
          notes=base_note.format(id="exton_op.mehler.E_E")),
        E("exton_op.rogers.E", "If $u=\\sqrt{q}$, $v=w=1$, then", "double sum of E_{n+m}(x,y)",
          exton_rogers_pair, ("t", "s"), required_scale=2, default_order=6,
          notes=base_note.format(id="exton_op.rogers.E")),
    ]
