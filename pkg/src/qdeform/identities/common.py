"""Small helpers shared by the catalog builders."""

from __future__ import annotations

import itertools
from typing import Callable, Sequence, Union

from .. import qkernel as K
from ..algebra.poly import LaurentPoly
from ..algebra.rational import RationalExpr
from ..algebra.series import TruncatedSeries
from ..special import Frame, P, mono_pow

Coeff = Union[int, LaurentPoly, RationalExpr, TruncatedSeries]


def multi_sum(frame: Frame, names: Sequence[str], coeff: Callable[..., Coeff]) -> TruncatedSeries:
    """sum over n_1..n_r of coeff(n_1..n_r) * prod(names[i]**n_i).

    ``names`` are small symbols, so a multi-index whose total exceeds the order
    contributes nothing; coefficients may themselves be series.
    """
    idx = [frame.smalls.index(n) for n in names]
    total = frame.zero()
    for ns in itertools.product(range(frame.order + 1), repeat=len(names)):
        if sum(ns) > frame.order:
            continue
        c = coeff(*ns)
        key = [0] * len(frame.smalls)
        for i, e in zip(idx, ns):
            key[i] = e
        key = tuple(key)
        if isinstance(c, TruncatedSeries):
            total = total + c.shift(key)
        else:
            c = RationalExpr.of(c)
            if not c.is_zero():
                total = total + TruncatedSeries.monomial(frame.smalls, frame.order, key, c)
    return total


def poch_ratio(frame: Frame, num: Sequence, den: Sequence, n: int) -> TruncatedSeries:
    """prod (a;q)_n / prod (b;q)_n as a series; parameters may carry small symbols."""
    out = frame.const(1)
    for a in num:
        out = out * frame.poch(P(a), n)
    for b in den:
        out = out * frame.inv_poch(P(b), n)
    return out


def inf_ratio(frame: Frame, num: Sequence, den: Sequence) -> TruncatedSeries:
    """prod (a;q)_inf / prod (b;q)_inf with every argument formally small."""
    out = frame.const(1)
    for a in num:
        out = out * frame.inf(P(a))
    for b in den:
        out = out * frame.inv_inf(P(b))
    return out


def qbinom_coeff(n: int, k: int, ctx) -> LaurentPoly:
    return K.gauss_binomial(n, k, ctx)


def upow(u, e: int) -> LaurentPoly:
    return mono_pow(u, e)


C2 = K.binom2
