"""q-Pochhammer symbols, Gaussian binomials and the q-derivative.

Two infinite-product algorithms with disjoint soundness domains:

* :func:`qpochhammer_inf_series` expands ``(a;q)_inf`` through Euler's sums
  and needs ``a`` to carry a small symbol;
* :func:`qpochhammer_qpower_truncated` multiplies factors of ``(q^m;q^r)_inf``
  and is only sound because every omitted factor touches q-degrees > N.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .algebra import symbols as S
from .algebra.poly import LaurentPoly, NegativeExponent
from .algebra.rational import RationalExpr
from .algebra.series import NotFormallySmall, TruncatedSeries

Ctx = S.Context
ONE = LaurentPoly.const(1)


def binom2(n: int) -> int:
    """C(n, 2) = n(n-1)/2, valid for negative n as well."""
    return n * (n - 1) // 2


def qp(e, ctx: Ctx = S.DEFAULT, coeff=1) -> LaurentPoly:
    """The monomial coeff * q**e."""
    return LaurentPoly.qpow(e, ctx, coeff)


# -- finite Pochhammer -----------------------------------------------------------


def pochhammer_factors(a: LaurentPoly, n: int, ctx: Ctx = S.DEFAULT, base=1) -> List[LaurentPoly]:
    """The factors 1 - a*q^(base*k), k = 0..n-1."""
    if n < 0:
        raise ValueError("length must be non-negative")
    step = ctx.q_exponent(base)
    return [ONE - a.shift(step * k) for k in range(n)]


def qpochhammer(a: LaurentPoly, n: int, ctx: Ctx = S.DEFAULT, base=1) -> LaurentPoly:
    """(a; q^base)_n expanded."""
    if isinstance(a, int):
        a = LaurentPoly.const(a)
    if a.is_monomial() and base == 1:
        return _qpoch_monomial(a, n, ctx)
    out = ONE
    for f in pochhammer_factors(a, n, ctx, base):
        out = out * f
    return out


def _qpoch_monomial(a: LaurentPoly, n: int, ctx: Ctx) -> LaurentPoly:
    # finite q-binomial theorem: (a;q)_n = sum_k [n k] q^C(k,2) (-a)^k
    out = LaurentPoly()
    term_a = ONE
    for k in range(n + 1):
        out = out + gauss_binomial(n, k, ctx).shift(ctx.q_exponent(binom2(k))) * term_a
        term_a = term_a * (-a)
    return out


def qpochhammer_multi(args: Sequence[LaurentPoly], n: int, ctx: Ctx = S.DEFAULT) -> LaurentPoly:
    out = ONE
    for a in args:
        out = out * qpochhammer(a, n, ctx)
    return out


def inv_qpochhammer(a: LaurentPoly, n: int, ctx: Ctx = S.DEFAULT, base=1) -> RationalExpr:
    """1 / (a; q^base)_n as a factored rational expression."""
    return RationalExpr.fraction(1, pochhammer_factors(a, n, ctx, base))


@lru_cache(maxsize=4096)
def inv_qq(n: int, scale: int = 1) -> RationalExpr:
    """1 / (q;q)_n."""
    ctx = S.Context(scale)
    return inv_qpochhammer(qp(1, ctx), n, ctx)


def pochhammer_ratio(num_args: Sequence[LaurentPoly], den_args: Sequence[LaurentPoly], n: int,
                     ctx: Ctx = S.DEFAULT) -> RationalExpr:
    """prod (a;q)_n / prod (b;q)_n with the numerator expanded, denominator factored."""
    num = qpochhammer_multi(num_args, n, ctx)
    out = RationalExpr(num)
    for b in den_args:
        out = out * inv_qpochhammer(b, n, ctx)
    return out


# -- Gaussian binomials ------------------------------------------------------------

_GAUSS_LOCK = threading.Lock()
_GAUSS: Dict[Tuple[int, int], LaurentPoly] = {}


def _gauss_scale1(n: int, k: int) -> LaurentPoly:
    if k < 0 or k > n:
        return LaurentPoly()
    if k == 0 or k == n:
        return ONE
    key = (n, k)
    val = _GAUSS.get(key)
    if val is not None:
        return val
    # fill row by row with the Pascal rule [m k] = [m-1 k] + q^(m-k) [m-1 k-1]
    with _GAUSS_LOCK:
        for m in range(1, n + 1):
            for j in range(1, min(m, k + 1)):
                if (m, j) in _GAUSS or j == m:
                    continue
                left = _gauss_scale1(m - 1, j)
                right = _gauss_scale1(m - 1, j - 1).shift(m - j)
                _GAUSS[(m, j)] = left + right
        return _GAUSS[key]


def gauss_binomial(n: int, k: int, ctx: Ctx = S.DEFAULT) -> LaurentPoly:
    """[n k]_q by the Pascal recurrence; zero outside 0 <= k <= n."""
    g = _gauss_scale1(n, k)
    if ctx.scale == 1 or not g.terms:
        return g
    return LaurentPoly({key * ctx.scale: c for key, c in g.terms.items()}, _trusted=True)


# -- q-derivative ----------------------------------------------------------------


def dq_factor(e: int, ctx: Ctx = S.DEFAULT) -> LaurentPoly:
    """1 - q^e, the factor picked up by x^e under D_q."""
    return ONE - qp(e, ctx)


def dq_poly(f: LaurentPoly, name: str, ctx: Ctx = S.DEFAULT) -> LaurentPoly:
    idx = S.sym_index(name)
    unit = 1 << (S.BITS * idx)
    out: Dict[int, object] = {}
    for key, c in f.terms.items():
        e = S.exponent(key, idx)
        if e < 0:
            raise NegativeExponent(f"D_q needs non-negative powers of {name}")
        if e == 0:
            continue
        nk = key - unit
        for fk, fc in dq_factor(e, ctx).terms.items():
            k2 = nk + fk
            out[k2] = out.get(k2, 0) + c * fc
    return LaurentPoly(out)


def dq(f, name: str, ctx: Ctx = S.DEFAULT):
    """D_q f = (f(x) - f(qx)) / x in the symbol ``name``."""
    if isinstance(f, TruncatedSeries):
        return f.dq(name, ctx)
    return dq_poly(f, name, ctx)


def dq_pow(f, name: str, n: int, ctx: Ctx = S.DEFAULT):
    if n < 0:
        raise ValueError("n must be non-negative")
    for _ in range(n):
        f = dq(f, name, ctx)
    return f


def dq_pow_monomial(k: int, n: int, ctx: Ctx = S.DEFAULT) -> RationalExpr:
    """Closed form coefficient (q;q)_k / (q;q)_{k-n} of D_q^n x^k (0 if n > k)."""
    if n > k:
        return RationalExpr(LaurentPoly())
    out = ONE
    for j in range(k - n + 1, k + 1):
        out = out * dq_factor(j, ctx)
    return RationalExpr(out)


# -- series-valued Pochhammers -----------------------------------------------------


def split_monomial(a: LaurentPoly, smalls: Sequence[str]) -> Tuple[Tuple[int, ...], LaurentPoly]:
    """Write a monomial as prod(smalls**exps) * cofactor with a small-free cofactor."""
    if not a.is_monomial():
        raise ValueError("argument must be a single monomial")
    (exps, cof), = a.split(tuple(smalls)).items()
    if any(e < 0 for e in exps):
        raise NegativeExponent("negative power of a small symbol")
    return exps, cof


def power_sum(coeff, a: LaurentPoly, smalls: Sequence[str], order: int, start: int = 0) -> TruncatedSeries:
    """sum_{n>=start} coeff(n) * a^n for a monomial ``a`` with positive small degree.

    ``coeff(n)`` returns a small-free RationalExpr / LaurentPoly / TruncatedSeries.
    The sum stops at the first n whose small degree exceeds the order, which is
    exact because every later term carries at least that small degree.
    """
    exps, cof = split_monomial(a, smalls)
    d = sum(exps)
    if d == 0:
        raise NotFormallySmall("argument has no small content; the sum does not truncate")
    total = TruncatedSeries.zero(smalls, order)
    n = start
    cof_pow = cof ** start
    while n * d <= order:
        c = coeff(n)
        key = tuple(e * n for e in exps)
        if isinstance(c, TruncatedSeries):
            total = total + c.shift(key, cof_pow)
        else:
            c = RationalExpr.of(c) * cof_pow
            if not c.is_zero():
                total = total + TruncatedSeries.monomial(smalls, order, key, c)
        n += 1
        cof_pow = cof_pow * cof
    return total


def qpochhammer_inf_series(a: LaurentPoly, smalls: Sequence[str], order: int,
                           ctx: Ctx = S.DEFAULT, inverse: bool = False) -> TruncatedSeries:
    """(a;q)_inf, or 1/(a;q)_inf when ``inverse``, by Euler's expansions.

    (a;q)_inf = sum (-1)^n q^C(n,2) a^n / (q;q)_n and 1/(a;q)_inf = sum a^n / (q;q)_n.
    """
    if not a.terms:
        return TruncatedSeries.const(smalls, order, 1)
    if inverse:
        return power_sum(lambda n: inv_qq(n, ctx.scale), a, smalls, order)
    return power_sum(
        lambda n: inv_qq(n, ctx.scale) * qp(binom2(n), ctx, (-1) ** n), a, smalls, order
    )


def qpochhammer_series(a: LaurentPoly, n: int, smalls: Sequence[str], order: int,
                       ctx: Ctx = S.DEFAULT, inverse: bool = False) -> TruncatedSeries:
    """(a;q)_n, or its reciprocal, as a series in the small symbols of ``a``.

    1/(a;q)_n = sum_j [n+j-1 j] a^j; a small-free ``a`` gives a constant series.
    """
    exps, _ = split_monomial(a, smalls)
    if sum(exps) == 0:
        c = inv_qpochhammer(a, n, ctx) if inverse else RationalExpr(qpochhammer(a, n, ctx))
        return TruncatedSeries.const(smalls, order, c)
    if inverse:
        if n == 0:
            return TruncatedSeries.const(smalls, order, 1)
        return power_sum(lambda j: gauss_binomial(n + j - 1, j, ctx), a, smalls, order)
    return TruncatedSeries.from_poly(qpochhammer(a, n, ctx), smalls, order)


def qpochhammer_qpower_truncated(m: int, r: int, order: int, ctx: Ctx = S.DEFAULT) -> LaurentPoly:
    """(q^m; q^r)_inf correct through q-degree ``order``.

    Only factors 1 - q^(m+kr) with m + kr <= order are multiplied; the rest
    differ from 1 only above the order.  Result is truncated at q^order.
    """
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    limit = ctx.q_exponent(order)
    out = ONE
    e = m
    while e <= order:
        out = _truncate_q(out * dq_factor(e, ctx), limit)
        e += r
    return out


def _truncate_q(p: LaurentPoly, limit: int) -> LaurentPoly:
    return LaurentPoly({k: c for k, c in p.terms.items() if S.exponent(k, 0) <= limit}, _trusted=True)


def truncate_q(p: LaurentPoly, order: int, ctx: Ctx = S.DEFAULT) -> LaurentPoly:
    """Drop every term of q-degree above ``order``."""
    return _truncate_q(p, ctx.q_exponent(order))


def q_series_inverse(p: LaurentPoly, order: int, ctx: Ctx = S.DEFAULT) -> LaurentPoly:
    """Inverse of a pure q power series with constant term 1, through q^order."""
    if p.terms.get(0) != 1:
        raise ValueError("constant term must be 1")
    s = ctx.scale
    coeffs = {S.exponent(k, 0): c for k, c in p.terms.items()}
    if any(S.decode(k).keys() - {0} for k in p.terms):
        raise ValueError("not a pure q-series")
    top = order * s
    inv = [0] * (top + 1)
    inv[0] = 1
    for n in range(1, top + 1):
        acc = 0
        for e, c in coeffs.items():
            if 0 < e <= n:
                acc += c * inv[n - e]
        inv[n] = -acc
    return LaurentPoly({n: c for n, c in enumerate(inv) if c})
