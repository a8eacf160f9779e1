"""The deformed homogeneous polynomials R_n and the operator T(yD_q|u)."""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .. import qkernel as K
from ..algebra import symbols as S
from ..algebra.poly import LaurentPoly
from ..algebra.rational import RationalExpr
from ..operators import OperatorSpec, apply_operator, operator_on_exponential, operator_on_product
from ..special import (P, eq_deformed, mono_pow, named_polys, named_polys_direct, phi, r_poly, rn,
                       rn_hypergeometric_rep, rn_qdifference_residual, rn_recurrence_step, rn_shift_expansion,
                       terminating_phi)
from .common import C2, inf_ratio
from .engine import BuildContext, Check, IdentitySpec

ONE = LaurentPoly.const(1)
HALF = Fraction(1, 2)


def _q(bc: BuildContext, e=1, coeff=1) -> LaurentPoly:
    return LaurentPoly.qpow(e, bc.ctx, coeff)


# -- specializations ------------------------------------------------------------------


def _specialization(kind):
    def build(bc):
        n = bc["n"]
        lhs = named_polys(kind, n, ctx=bc.ctx)
        yield Check("summation formula", lhs, named_polys_direct(kind, n, ctx=bc.ctx))
        if kind == "pochhammer_as_poly":
            yield Check("(x;q)_n", lhs, K.qpochhammer(P("x"), n, bc.ctx))

    return build


def pochhammer_literal_sum(bc):
    """The sum as displayed: sum_k [n k] (-1)^n q^C(n,2) x^k."""
    n = bc["n"]
    out = LaurentPoly()
    for k in range(n + 1):
        out = out + K.gauss_binomial(n, k, bc.ctx) * _q(bc, C2(n), (-1) ** n) * P("x") ** k
    return K.qpochhammer(P("x"), n, bc.ctx), out


def exton_def_pair(bc, literal: bool = False):
    """E_n against both displayed sums; ``literal`` uses sqrt(q)^C(n,2) in every term."""
    n, ctx = bc["n"], bc.ctx
    x, y = P("x"), P("y")
    lhs = named_polys("exton_E", n, ctx=ctx)
    first, second = LaurentPoly(), RationalExpr(LaurentPoly())
    mq = -_q(bc, HALF)
    neg = lambda m: RationalExpr(K.qpochhammer(mq, m, ctx, base=HALF))
    for k in range(n + 1):
        e = C2(n) if literal else C2(k)
        w = _q(bc, Fraction(e, 2)) * x ** (n - k) * y ** k
        first = first + K.gauss_binomial(n, k, ctx) * w
        # [n k] at base sqrt(q): the scale-1 table read in the stored variable
        g = K.gauss_binomial(n, k, S.DEFAULT)
        ratio = neg(n) / (neg(k) * neg(n - k))
        second = second + ratio * RationalExpr(g * w)
    yield Check("first sum", lhs, first)
    yield Check("second sum", RationalExpr(lhs), second)


def _uv_reduction(bc):
    n = bc["n"]
    x, y, u, v = P("x"), P("y"), P("u"), P("v")
    lhs = r_poly(n, x, y, u, v, bc.ctx)
    return lhs, mono_pow(u, C2(n)) * r_poly(n, x, mono_pow(u, 1 - n) * y, 1, u * v, bc.ctx)


def _recurrences(bc):
    n = bc["n"]
    yield Check("first", *rn_recurrence_step(n, "first", bc.ctx))
    yield Check("second", *rn_recurrence_step(n, "second", bc.ctx))


def _shift(bc):
    return rn_shift_expansion(bc["n"], bc["m"], bc.ctx)


def _limit(bc):
    """[n k] agrees with 1/(q;q)_k through q^(n-k): the x^k coefficients of R_n(1,x;u) and e_q(x,u)."""
    n, ctx = bc["n"], bc.ctx
    for k in range(5):
        bound = n - k
        approx = K.truncate_q(K.gauss_binomial(n, k, ctx), bound, ctx)
        limit = K.q_series_inverse(K.qpochhammer(_q(bc), k, ctx), bound, ctx)
        yield Check(f"k={k} through q^{bound}", approx, limit)
        # the next q-coefficient is where they first differ
        nxt = K.truncate_q(K.gauss_binomial(n, k, ctx), bound + 1, ctx)
        lim1 = K.q_series_inverse(K.qpochhammer(_q(bc), k, ctx), bound + 1, ctx)
        if k >= 1:
            yield Check(f"k={k} differs at q^{bound + 1}", int(nxt != lim1), 1)


def _hyper_rep_main(bc):
    lhs, rhs = rn_hypergeometric_rep(bc["n"], bc.ctx)
    return RationalExpr(lhs), rhs


def _tphi(bc, upper, lower, z, u=None, base=1):
    return terminating_phi(upper, lower, z, u, bc.ctx, base)


def _rep_h(bc):
    n = bc["n"]
    x = P("x")
    lhs = RationalExpr(named_polys("rogers_szego_h", n, x, ctx=bc.ctx))
    up = [_q(bc, -n), 0]
    yield Check("2Phi0", lhs, _tphi(bc, up, [], _q(bc, n) * x, u=1))
    yield Check("2phi0", lhs, _tphi(bc, up, [], _q(bc, n) * x))


def _rep_h_inverse(bc):
    n = bc["n"]
    x = P("x")
    lhs = RationalExpr(named_polys("inverse_h", n, x, ctx=bc.ctx))
    pre = _q(bc, C2(n))
    yield Check("2Phi0", lhs, _tphi(bc, [_q(bc, -n), 0], [], _q(bc) * x, u=_q(bc, 2)) * pre)
    yield Check("1phi1", lhs, _tphi(bc, [_q(bc, -n)], [0], _q(bc) * x) * pre)


def _rep_r(bc):
    n = bc["n"]
    x, y = P("x"), P("y")
    lhs = RationalExpr(named_polys("homogeneous_r", n, x, y, ctx=bc.ctx))
    z = _q(bc, n) * y * x ** -1
    yield Check("2Phi0", lhs, _tphi(bc, [_q(bc, -n), 0], [], z, u=1) * x ** n)
    yield Check("2phi0", lhs, _tphi(bc, [_q(bc, -n), 0], [], z) * x ** n)


def _rep_pochhammer(bc):
    n = bc["n"]
    x = P("x")
    lhs = RationalExpr(K.qpochhammer(x, n, bc.ctx))
    yield Check("2Phi0", lhs, _tphi(bc, [_q(bc, -n), 0], [], -_q(bc, n) * x, u=_q(bc)))
    yield Check("2phi1", lhs, _tphi(bc, [_q(bc, -n), 0], [0], _q(bc, n) * x))


def sw_rep_pair(bc, literal: bool = False):
    n = bc["n"]
    x = P("x")
    lhs = RationalExpr(named_polys("stieltjes_wigert_S", n, x, ctx=bc.ctx))
    z = _q(bc, n + 1) * x
    yield Check("2Phi0", lhs, _tphi(bc, [_q(bc, -n), 0], [], z, u=_q(bc, 2)))
    yield Check("1phi1", lhs, _tphi(bc, [_q(bc, -n)], [0], -z if literal else z))


def exton_rep_pair(bc, literal: bool = False):
    n = bc["n"]
    x, y = P("x"), P("y")
    lhs = RationalExpr(named_polys("exton_E", n, x, y, ctx=bc.ctx))
    z = _q(bc, n) * y * x ** -1
    if not literal:
        yield Check("2Phi0", lhs, _tphi(bc, [_q(bc, -n), 0], [], z, u=_q(bc, HALF)) * x ** n)
    third = _q(bc) if literal else _q(bc, HALF)
    upper = [_q(bc, -Fraction(n, 2)), -_q(bc, -Fraction(n, 2)), third, 0]
    lower = [_q(bc, HALF), -_q(bc, HALF)]
    yield Check("4phi2", lhs, _tphi(bc, upper, lower, z, base=HALF) * x ** n)


def _qdiff(bc):
    first, second = rn_qdifference_residual(bc["n"], bc.ctx)
    yield Check("derivative form", first, LaurentPoly())
    yield Check("shift form", second, LaurentPoly())


def _dq_lowering(bc):
    n = bc["n"]
    x, u = P("x"), P("u")
    lhs = K.dq_poly(rn(n, 1, x, u, bc.ctx), "x", bc.ctx)
    return lhs, (ONE - _q(bc, n)) * rn(n - 1, 1, u * x, u, bc.ctx)


# -- the operator -----------------------------------------------------------------------


def _op(bc, coefficient="y", u="u"):
    return OperatorSpec.make("x", coefficient, u)


def _translation(bc):
    n = bc["n"]
    f = bc.frame
    x = P("x")
    op = _op(bc)
    yield Check("T{x^n}", apply_operator(op, f.series(x ** n), bc.ctx), f.series(rn(n, ctx=bc.ctx)))
    # power series input with symbolic coefficients a_k
    coeffs = [P(f"a{k}") for k in range(f.order - n + 1)]
    src = f.zero()
    want = f.zero()
    for k, a in enumerate(coeffs):
        src = src + f.series(a * x ** (n + k))
        want = want + f.series(a * rn(n + k, ctx=bc.ctx))
    yield Check("T{sum a_k x^(n+k)}", apply_operator(op, src, bc.ctx), want)


def _named_operators(bc):
    n = bc["n"]
    f = bc.frame
    x, y = P("x"), P("y")
    g = lambda k: K.gauss_binomial(n, k, bc.ctx)
    chen = sum((g(k) * y ** k * x ** (n - k) for k in range(n + 1)), LaurentPoly())
    saad = sum((g(k) * _q(bc, C2(k), (-1) ** k) * y ** k * x ** (n - k) for k in range(n + 1)), LaurentPoly())
    rr = sum((g(k) * _q(bc, k * k) * y ** k * x ** (n - k) for k in range(n + 1)), LaurentPoly())
    src = f.series(x ** n)
    yield Check("T(yD_q)", apply_operator(OperatorSpec.chen("y"), src, bc.ctx), f.series(chen))
    yield Check("R(yD_q)", apply_operator(OperatorSpec.saad("y", ctx=bc.ctx), src, bc.ctx), f.series(saad))
    yield Check("RR operator", apply_operator(OperatorSpec.rogers_ramanujan("y", ctx=bc.ctx), src, bc.ctx),
                f.series(rr))


def _exton_operator(bc):
    n = bc["n"]
    f = bc.frame
    x = P("x")
    out = apply_operator(OperatorSpec.exton("y", ctx=bc.ctx), f.series(x ** n), bc.ctx)
    return out, f.series(named_polys_direct("exton_E", n, ctx=bc.ctx))


def _on_exp(bc):
    f = bc.frame
    return operator_on_exponential(_op(bc), "a", "v", f)


def on_exp_vq_pair(bc, literal: bool = False):
    f = bc.frame
    a, x, y, u = P("a"), P("x"), P("y"), P("u")
    lhs = apply_operator(_op(bc), f.inf(a * x), bc.ctx)
    arg = a * y if literal else -a * y
    return lhs, f.inf(a * x) * phi([0, 0], [a * x], arg, f, u=_q(bc) * u)


def _on_exp_cor(bc):
    f = bc.frame
    a, x, y, u = P("a"), P("x"), P("y"), P("u")
    op = _op(bc)
    lhs1 = apply_operator(op, f.inv_inf(a * x), bc.ctx)
    yield Check("v=1", lhs1, eq_deformed(a * y, u, f) * f.inv_inf(a * x))
    yield Check("v=q", *on_exp_vq_pair(bc))


def _on_product(bc):
    return operator_on_product(_op(bc), "a", "v", "b", "w", bc.frame)


def _on_product_v1w1(bc):
    f = bc.frame
    a, b, x, y, u = P("a"), P("b"), P("x"), P("y"), P("u")
    base = f.inv_inf(a * x) * f.inv_inf(b * x)
    lhs = apply_operator(_op(bc), base, bc.ctx)

    # the k-th term carries y^k, so k <= order is exact
    def term(k):
        c = mono_pow(u, C2(k)) * (a * y) ** k
        return f.poch(b * x, k) * eq_deformed(mono_pow(u, k) * b * y, u, f) * f.series(c).scale(f.inv_qq(k))

    return lhs, base * f.sum(term, 1)


def _chen_liu(bc):
    f = bc.frame
    a, b, x, y = P("a"), P("b"), P("x"), P("y")
    lhs = apply_operator(OperatorSpec.chen("y"), f.inv_inf(a * x) * f.inv_inf(b * x), bc.ctx)
    return lhs, inf_ratio(f, [a * b * x * y], [a * x, b * x, a * y, b * y])


def _saad_sukhi(bc):
    f = bc.frame
    a, b, x, y = P("a"), P("b"), P("x"), P("y")
    lhs = apply_operator(OperatorSpec.saad("y", ctx=bc.ctx), f.inv_inf(a * x) * f.inv_inf(b * x), bc.ctx)
    rhs = inf_ratio(f, [b * y], [a * x, b * x]) * phi([b * x], [b * y], a * y, f)
    return lhs, rhs


def _on_product_v1wq(bc):
    f = bc.frame
    a, b, x, y, u = P("a"), P("b"), P("x"), P("y"), P("u")
    base = f.inf(b * x) * f.inv_inf(a * x)
    lhs = apply_operator(_op(bc), base, bc.ctx)

    # y^k in the k-th term: k <= order is exact
    def term(k):
        c = mono_pow(u, C2(k)) * (a * y) ** k
        inner = phi([0], [b * x * _q(bc, k)], mono_pow(u, k) * b * y, f, u=u)
        return f.inv_poch(b * x, k) * inner * f.series(c).scale(f.inv_qq(k))

    return lhs, base * f.sum(term, 1)


def saad_sukhi_phi11_pair(bc, literal: bool = False):
    """1phi1(b/a; bx; q, ay) = sum q^C(k,2) (-ay)^k/((q)_k (bx)_k) 0phi1(-; bxq^k; q, q^k by).

    ``literal`` uses the lower parameter ax and (ay)^k as displayed.
    """
    f = bc.frame
    a, b, x, y = P("a"), P("b"), P("x"), P("y")
    lower = a * x if literal else b * x
    lhs = phi([b * a ** -1], [lower], a * y, f)
    sign = 1 if literal else -1

    def term(k):
        c = _q(bc, C2(k)) * (sign * a * y) ** k
        inner = phi([], [b * x * _q(bc, k)], _q(bc, k) * b * y, f)
        return f.inv_poch(b * x, k) * inner * f.series(c).scale(f.inv_qq(k))

    return lhs, f.sum(term, 1)


def _saad_sukhi_phi11(bc):
    f = bc.frame
    a, b, x, y = P("a"), P("b"), P("x"), P("y")
    base = f.inf(b * x) * f.inv_inf(a * x)
    lhs = apply_operator(OperatorSpec.saad("y", ctx=bc.ctx), base, bc.ctx)
    yield Check("operator form", lhs, base * phi([b * a ** -1], [b * x], a * y, f))
    yield Check("0phi1 expansion", *saad_sukhi_phi11_pair(bc))


def entries() -> List[IdentitySpec]:
    E = IdentitySpec
    spec_anchor = "Some specializations:"
    fam8 = {"n": (0, 8)}
    fam6 = {"n": (0, 6)}
    return [
        E("rn.spec.h", spec_anchor, "R_n(1,x;1,1) = h_n(x)", _specialization("rogers_szego_h"), (), fam8,
          default_order=None),
        E("rn.spec.h_inverse", spec_anchor, "R_n(1,x;q,q) = h_n(x|q^-1)", _specialization("inverse_h"), (), fam8,
          default_order=None),
        E("rn.spec.r", spec_anchor, "R_n(x,y;1,1) = r_n(x,y)", _specialization("homogeneous_r"), (), fam8,
          default_order=None),
        E("rn.spec.pochhammer", spec_anchor, "R_n(1,-x;1,q) = (x;q)_n", _specialization("pochhammer_as_poly"),
          (), fam8, default_order=None,
          notes="The summand is read as (-1)^k q^C(k,2) x^k; the display writes (-1)^n q^C(n,2) "
                "(errata.rn.spec.pochhammer)."),
        E("rn.spec.sw", spec_anchor, "R_n(1,qx;1,q^2) = S_n(x)", _specialization("stieltjes_wigert_S"), (), fam8,
          default_order=None),
        E("rn.exton_def", "Define the Exton polynomials as", "E_n(x,y) = R_n(x,y;1,sqrt q) and its sqrt(q) form",
          exton_def_pair, (), fam8, required_scale=2, default_order=None,
          notes="The summand power is read as sqrt(q)^C(k,2); with sqrt(q)^C(n,2) both displayed sums "
                "fail for n >= 2 (errata.rn.exton_def)."),
        E("rn.uv_reduction", "then we will deal with $u$-deformed homogeneous polynomials",
          "R_n(x,y;u,v) = u^C(n,2) R_n(x,u^(1-n)y;1,uv)", _uv_reduction, (), fam8, default_order=None,
          notes="The definition's u^C(alpha-k,2) is read with alpha = n."),
        E("rn.recurrences", "fulfill the following recursion relations", "both three-term recurrences",
          _recurrences, (), {"n": (0, 10)}, default_order=None),
        E("rn.shift", "By iterating the above theorem", "R_{n+m} expansion", _shift, (),
          {"n": (0, 10), "m": (0, 10)}, family_filter=lambda p: p["n"] + p["m"] <= 10, default_order=None),
        E("rn.limit", "If $0<\\vert q\\vert<1$", "R_n(1,x;u) -> e_q(x,u): x^k coefficients agree through q^(n-k)",
          _limit, (), {"n": (8, 10)}, default_order=None,
          notes="Formal reading of the limit: [n k] - 1/(q;q)_k has q-valuation exactly n-k+1 for k >= 1."),
        E("rn.hyper_rep", "Deformed basic hypergeometric representation",
          "R_n(1,x;u) = 2Phi0(q^-n,0;-;q,u,q^n x)", _hyper_rep_main, (), fam8, default_order=None),
        E("rn.hyper_rep.h", "The basic hypergeometric representation of polynomials",
          "h_n as 2Phi0 and 2phi0", _rep_h, (), fam6, default_order=None),
        E("rn.hyper_rep.h_inverse", "The basic hypergeometric representation of polynomials",
          "h_n(x|q^-1) as 2Phi0 and 1phi1", _rep_h_inverse, (), fam6, default_order=None,
          notes="Verified as q^C(n,2) 2Phi0(q^-n,0;-;q,q^2,qx) = q^C(n,2) 1phi1(q^-n;0;q,qx); the display "
                "writes the argument qy and lists the 1phi1 parameters as (q^-n,0;-)."),
        E("rn.hyper_rep.r", "The basic hypergeometric representation of polynomials",
          "r_n as x^n 2Phi0 and x^n 2phi0", _rep_r, (), fam6, default_order=None),
        E("rn.hyper_rep.pochhammer", "The basic hypergeometric representation of polynomials",
          "(x;q)_n as 2Phi0 and 2phi1", _rep_pochhammer, (), fam6, default_order=None),
        E("rn.hyper_rep.sw", "The basic hypergeometric representation of polynomials",
          "S_n as 2Phi0 and 1phi1", sw_rep_pair, (), fam6, default_order=None,
          notes="The 1phi1 argument is q^(n+1)x; the displayed -q^(n+1)x fails at n = 1 "
                "(errata.rn.hyper_rep.sw)."),
        E("rn.hyper_rep.exton", "The basic hypergeometric representation of polynomials",
          "E_n as x^n 2Phi0 and x^n 4phi2 at base sqrt q", exton_rep_pair, (), fam6, required_scale=2,
          default_order=None,
          notes="The 2Phi0 form verifies as displayed. The 4phi2 verifies with third upper parameter sqrt(q); "
                "the displayed q leaves a factor (q;sqrt q)_k/(sqrt q;sqrt q)_k and fails at n = 1 "
                "(errata.rn.hyper_rep.exton_4phi2)."),
        E("rn.qdiff", "proportional functional difference equation",
          "q-difference equation for R_n(1,x;u), both forms", _qdiff, (), {"n": (1, 8)}, default_order=None,
          notes="(D_q y)(u^-1 x) is D_q y evaluated at u^-1 x."),
        E("rn.dq_lowering", "then the right side of", "D_q R_n(1,x;u) = (1-q^n) R_{n-1}(1,ux;u)", _dq_lowering,
          (), {"n": (1, 8)}, default_order=None),
        E("op.translation", "can be represented by the deformed $q$-exponential operator",
          "T(yD_q|u) x^n = R_n(x,y;u) and the series form", _translation, ("x", "y"), fam6, default_order=6),
        E("op.named", "generalizes the operators given by Chen",
          "Chen, Saad and Rogers-Ramanujan operators on x^n", _named_operators, ("x", "y"), fam6, default_order=6),
        E("op.on_exp", "If $u\\neq0$", "T(yD_q|u) e_q(ax,v) with symbolic v", _on_exp, ("x", "y"), default_order=6),
        E("op.on_exp.corollaries", "If $u\\neq0$", "v = 1 and v = q cases", _on_exp_cor, ("x", "y"),
          default_order=6,
          notes="For v = q the operand is (ax;q)_inf = e_q(-ax,q), so the 2Phi1 argument is -ay; the "
                "display's ay is registered as errata.op.on_exp.vq."),
        E("op.on_product", "\\mathrm{T}(yD_{q}|u)\\{\\mathrm{e}_{q}(ax,v)\\mathrm{e}_{q}(bx,w)\\}",
          "T(yD_q|u) e_q(ax,v) e_q(bx,w) with symbolic v, w", _on_product, ("x", "y"), default_order=6),
        E("op.on_product.v1w1", "If $v=w=1$, then", "T(yD_q|u) 1/(ax,bx;q)_inf", _on_product_v1w1, ("x", "y"),
          default_order=6),
        E("op.chen_liu", "a known result by Chen and Liu", "T(yD_q) 1/(ax,bx;q)_inf", _chen_liu, ("x", "y"),
          default_order=6),
        E("op.saad_sukhi", "a known result by Saad and Sukhi", "T(-yD_q|q) 1/(ax,bx;q)_inf as a 1phi1",
          _saad_sukhi, ("x", "y"), default_order=6),
        E("op.on_product.v1wq", "If $v=1$, $w=q$ and setting $b\\mapsto-b$, then",
          "T(yD_q|u) (bx;q)_inf/(ax;q)_inf", _on_product_v1wq, ("x", "y"), default_order=6),
        E("op.saad_sukhi_phi11", "from the Theorem 2.1 given by Saad and Sukhi",
          "1phi1(b/a;bx;q,ay) as a sum of 0phi1", _saad_sukhi_phi11, ("x", "y"), default_order=6,
          substitutions={"y": "-y", "u": "q"},
          notes="Verified as 1phi1(b/a;bx;q,ay) = sum q^C(k,2)(-ay)^k/((q;q)_k(bx;q)_k) "
                "0phi1(-;bxq^k;q,q^k by), which is the v=1, w=q corollary at y -> -y, u = q together with "
                "the operator form T(-yD_q|q){(bx)_inf/(ax)_inf} = (bx)_inf/(ax)_inf 1phi1(b/a;bx;q,ay). "
                "The display's lower parameter ax and (ay)^k are registered as errata.op.saad_sukhi_phi11."),
    ]
