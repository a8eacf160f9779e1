"""The u-deformed q-exponential operator T(yD_q|u) and its named cases."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from . import qkernel as K
from .algebra import symbols as S
from .algebra.poly import LaurentPoly
from .algebra.rational import RationalExpr
from .algebra.series import NotFormallySmall, TruncatedSeries
from .special import Frame, P, eq_deformed, mono_pow


class TargetSymbolInCoefficient(ValueError):
    """The operand already involves the symbol the operator introduces."""


@dataclass(frozen=True)
class OperatorSpec:
    """T(c*y D_x | u): sum_n u^C(n,2) (c*y)^n D_x^n / (q;q)_n.

    ``coefficient`` is the full monomial multiplying D_q (for instance -b or q*y);
    ``symbol`` is the symbol it introduces, checked against the operand.
    """

    target: str = "x"
    coefficient: LaurentPoly = LaurentPoly.var("y")
    u: LaurentPoly = LaurentPoly.var("u")
    symbol: str = "y"

    @classmethod
    def make(cls, target="x", y="y", u="u") -> "OperatorSpec":
        coeff = P(y)
        names = sorted(coeff.symbols() - {"q"})
        symbol = y if isinstance(y, str) else (names[0] if names else "")
        return cls(target, coeff, P(u), symbol)

    @classmethod
    def chen(cls, b="b", target="x") -> "OperatorSpec":
        """T(bD_q) = T(bD_q|1)."""
        return cls.make(target, b, 1)

    @classmethod
    def saad(cls, b="b", target="x", ctx: S.Context = S.DEFAULT) -> "OperatorSpec":
        """R(bD_q) = T(-bD_q|q)."""
        spec = cls.make(target, -P(b), LaurentPoly.qpow(1, ctx))
        return cls(spec.target, spec.coefficient, spec.u, b if isinstance(b, str) else spec.symbol)

    @classmethod
    def exton(cls, y="y", target="x", ctx: S.Context = S.DEFAULT) -> "OperatorSpec":
        """E(yD_q) = T(yD_q|sqrt q); needs an even base scale."""
        return cls.make(target, y, LaurentPoly.qpow(Fraction(1, 2), ctx))

    @classmethod
    def rogers_ramanujan(cls, y="y", target="x", ctx: S.Context = S.DEFAULT) -> "OperatorSpec":
        """R(yD_q) = T(qyD_q|q^2)."""
        spec = cls.make(target, LaurentPoly.qpow(1, ctx) * P(y), LaurentPoly.qpow(2, ctx))
        return cls(spec.target, spec.coefficient, spec.u, y if isinstance(y, str) else spec.symbol)


def apply_operator(op: OperatorSpec, f: TruncatedSeries, ctx: S.Context = S.DEFAULT) -> TruncatedSeries:
    """Apply T(c y D_x|u) to a series whose coefficients are free of y.

    For a small target the y^n x^j output coefficient is
    c_{j+n} [j+n n] u^C(n,2) coeff^n, read off the x^(j+n) input coefficient,
    so every output coefficient of total degree <= order is exact provided the
    operator coefficient carries small degree >= 1.
    """
    smalls = f.smalls
    if op.symbol and not f.coefficients_free_of(op.symbol):
        raise TargetSymbolInCoefficient(f"operand involves {op.symbol}")
    if op.symbol in smalls:
        j = smalls.index(op.symbol)
        if any(key[j] for key in f.terms):
            raise TargetSymbolInCoefficient(f"operand involves {op.symbol}")
    split = op.coefficient.split(smalls)
    if len(split) != 1:
        raise ValueError("operator coefficient must be a monomial")
    (cexps, cpoly), = split.items()
    if op.target not in smalls:
        return _apply_parameter_target(op, f, cexps, cpoly, ctx)
    if sum(cexps) < 1:
        raise NotFormallySmall("operator coefficient has no small content")
    i = smalls.index(op.target)
    out: Dict[Tuple[int, ...], list] = {}
    powers: Dict[int, RationalExpr] = {}
    for key, c in f.terms.items():
        m = key[i]
        for n in range(m + 1):
            nk = list(key)
            nk[i] -= n
            nk = tuple(a + n * b for a, b in zip(nk, cexps))
            if sum(nk) > f.order:
                continue
            w = powers.get(n)
            if w is None:
                w = RationalExpr(mono_pow(op.u, K.binom2(n)) * cpoly ** n)
                powers[n] = w
            out.setdefault(nk, []).append(c * w * K.gauss_binomial(m, n, ctx))
    terms = {}
    for k, parts in out.items():
        total = parts[0]
        for p in parts[1:]:
            total = total + p
        if not total.is_zero():
            terms[k] = total
    return TruncatedSeries(smalls, f.order, terms)


def _apply_parameter_target(op, f, cexps, cpoly, ctx):
    # D_q acts on the polynomial numerators; the sum stops when they vanish
    if sum(cexps) < 1:
        raise NotFormallySmall("operator coefficient has no small content")
    total = f
    current = f
    n = 1
    while n * sum(cexps) <= f.order:
        current = current.dq(op.target, ctx)
        if current.is_zero():
            break
        w = RationalExpr(mono_pow(op.u, K.binom2(n)) * cpoly ** n) * K.inv_qq(n, ctx.scale)
        total = total + current.shift(tuple(n * e for e in cexps), w)
        n += 1
    return total


def operator_on_exponential(op: OperatorSpec, a, v, frame: Frame):
    """Both sides of T(yD_q|u){e_q(ax,v)} = sum (uv)^C(k,2) (ay)^k/(q;q)_k e_q(av^k x, v).

    The k-th right-hand term carries y^k, so k <= order suffices.
    """
    a, v = P(a), P(v)
    x = P(op.target)
    lhs = apply_operator(op, eq_deformed(a * x, v, frame), frame.ctx)
    y = op.coefficient
    u = op.u
    ydeg = frame.small_degree(y)

    def term(k):
        c = frame.series(mono_pow(u * v, K.binom2(k)) * (a * y) ** k).scale(frame.inv_qq(k))
        return eq_deformed(a * mono_pow(v, k) * x, v, frame) * c

    rhs = frame.sum(term, ydeg)
    return lhs, rhs


def operator_on_product(op: OperatorSpec, a, v, b, w, frame: Frame):
    """Both sides of the operator applied to e_q(ax,v) e_q(bx,w).

    The (k,n) right-hand term carries y^(k+n), so k + n <= order suffices.
    """
    a, v, b, w = P(a), P(v), P(b), P(w)
    x = P(op.target)
    q = frame.q(1)
    lhs = apply_operator(op, eq_deformed(a * x, v, frame) * eq_deformed(b * x, w, frame), frame.ctx)
    y = op.coefficient
    u = op.u
    ydeg = frame.small_degree(y)
    rhs = frame.zero()
    for k in range(frame.order // ydeg + 1):
        left = eq_deformed(a * mono_pow(v, k) * x, v, frame)
        for n in range((frame.order - k * ydeg) // ydeg + 1):
            c = (mono_pow(u * v, K.binom2(k)) * mono_pow(u * w, K.binom2(n)) * (a * y) ** k
                 * (mono_pow(u, k) * b * y) ** n)
            coeff = frame.series(c).scale(frame.inv_qq(k) * frame.inv_qq(n))
            right = eq_deformed(b * q ** k * mono_pow(w, n) * x, w, frame)
            rhs = rhs + coeff * left * right
    return lhs, rhs
