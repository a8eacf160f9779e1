"""Displayed forms that fail verification.

Every main registry entry that needed a corrected reading has its literal
form here under ``errata.<main id>``.  These are expected to mismatch; the
report records where.
"""

from __future__ import annotations

from functools import partial
from typing import List

from ..algebra.poly import LaurentPoly
from ..special import P, named_polys, terminating_phi
from . import catalog_kernel as CK
from . import catalog_rn as CR
from . import catalog_series as CS
from .engine import Check, IdentitySpec


def _h_inverse_literal(bc):
    """q^C(n,2) 2Phi0(q^-n,0;-;q,q^2,qy) and the same with parameters listed as (q^-n,0;-)."""
    n = bc["n"]
    ctx = bc.ctx
    qn = LaurentPoly.qpow(-n, ctx)
    pre = LaurentPoly.qpow(CK.C2(n), ctx)
    arg = LaurentPoly.qpow(1, ctx) * P("y")
    lhs = named_polys("inverse_h", n, ctx=ctx)
    yield Check("2Phi0 with argument qy", lhs, terminating_phi([qn, 0], [], arg, LaurentPoly.qpow(2, ctx), ctx) * pre)
    yield Check("parameters (q^-n,0;-)", lhs, terminating_phi([qn, 0], [], arg, None, ctx) * pre)


def entries() -> List[IdentitySpec]:
    E = IdentitySpec
    lit = lambda fn: partial(fn, literal=True)
    fam6 = {"n": (0, 6)}
    return [
        E("errata.dq.product.iden6", "If $u=v=q$, then", "D_q^n (ax,bx;q)_inf without (-1)^n",
          lit(CK.iden6_pair), ("x",), {"n": (0, 3)}, default_order=6),
        E("errata.phi21.definition", "We define the deformed basic hypergeometric series",
          "q-difference equation with (b;q)_n in the 2Phi1 denominator", lit(CK.phi21_qdiff_residual), ("z",),
          default_order=10),
        E("errata.rn.spec.pochhammer", "Some specializations:", "(x;q)_n with (-1)^n q^C(n,2) in every term",
          CR.pochhammer_literal_sum, (), {"n": (0, 8)}, default_order=None),
        E("errata.rn.exton_def", "Define the Exton polynomials as", "E_n sums with sqrt(q)^C(n,2)",
          lit(CR.exton_def_pair), (), {"n": (0, 8)}, required_scale=2, default_order=None),
        E("errata.rn.hyper_rep.h_inverse", "The basic hypergeometric representation of polynomials",
          "h_n(x|q^-1) with argument qy", _h_inverse_literal, (), fam6, default_order=None),
        E("errata.rn.hyper_rep.sw", "The basic hypergeometric representation of polynomials",
          "S_n as 1phi1 with argument -q^(n+1)x", lit(CR.sw_rep_pair), (), fam6, default_order=None),
        E("errata.rn.hyper_rep.exton_4phi2", "The basic hypergeometric representation of polynomials",
          "E_n as 4phi2 with upper parameter q", lit(CR.exton_rep_pair), (), fam6, required_scale=2,
          default_order=None),
        E("errata.op.on_exp.vq", "If $u\\neq0$", "v = q case with argument ay", lit(CR.on_exp_vq_pair),
          ("x", "y"), default_order=6),
        E("errata.op.saad_sukhi_phi11", "from the Theorem 2.1 given by Saad and Sukhi",
          "1phi1(b/a;ax;q,ay) with (ay)^k", lit(CR.saad_sukhi_phi11_pair), ("x", "y"), default_order=6),
        E("errata.mehler.srivastava_agarwal", "The representation type Srivastava-Agarwal",
          "(-ty;q) factors and e_q(-atxv^k,v)", lit(CS.sa_pair), ("t",), default_order=6),
        E("errata.mehler.phi12_transform", "Transformation formula for", "1phi2 with argument -txy",
          lit(CS.phi12_pair), ("t",), default_order=6),
        E("errata.rogers.u_qinv", "If $u=q^{-1}$ in Corollary", "2phi1 argument q^k sy",
          lit(CS.rogers_u_qinv_pair), ("t", "s"), default_order=6),
        E("errata.rr_op.phi45", "Set $v=q^2$, $u=q^{-2}$", "1/(yz;q)_inf with (yz;q)_2m and q^2 xz",
          lit(CS.rr_phi45_pair), ("z",), default_order=6),
        E("errata.rr_op.rogers.sw", "If $u=q^2$, $v=w=1$, then", "right side in y",
          lit(CS.rr_rogers_pair), ("t", "s"), default_order=6),
        E("errata.exton_op.on_exp", "The Exton operator", "1phi1 argument -ax", lit(CS.exton_on_exp_pair),
          ("x", "y"), required_scale=2, default_order=6),
        E("errata.exton_op.phi54", "Set $v=\\sqrt{q}$, $u=\\sqrt{q^{-1}}$", "yz among the lower parameters",
          lit(CS.exton_phi54_pair), ("z",), required_scale=2, default_order=6),
        E("errata.exton_op.mehler.h_E", "If $u=1$, $v=\\sqrt{q}$, $x=1$, $y=x$, $z=y$ $w=z$, then",
          "1phi1 at base q", lit(CS.exton_mehler_h_pair), ("t",), required_scale=2, default_order=6),
        E("errata.exton_op.mehler.sa_E", "If $u=q$, $v=\\sqrt{q}$, $x=1$, $y=-x$, $z=y$, $w=z$, then",
          "1phi1 at base q", lit(CS.exton_mehler_sa_pair), ("t",), required_scale=2, default_order=6),
        E("errata.exton_op.mehler.E_E", "If $u=v=\\sqrt{q}$, then", "1phi1 at base q",
          lit(CS.exton_mehler_ee_pair), ("t",), required_scale=2, default_order=6),
        E("errata.exton_op.rogers.E", "If $u=\\sqrt{q}$, $v=w=1$, then", "1phi1 at base q",
          lit(CS.exton_rogers_pair), ("t", "s"), required_scale=2, default_order=6),
    ]
