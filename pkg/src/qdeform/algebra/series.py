"""Formal power series truncated at a total degree in declared small symbols."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import symbols as S
from .poly import LaurentPoly, NegativeExponent
from .rational import RationalExpr, _merge, sum_fractions

Key = Tuple[int, ...]
Coeff = Union[RationalExpr, LaurentPoly, int, Fraction]


class SmallSymbolMismatch(ValueError):
    """Two series were combined whose small-symbol tuples differ."""


class NotFormallySmall(ValueError):
    """An infinite expansion was requested in an argument with no small content."""


def _rx(c: Coeff) -> RationalExpr:
    return c if isinstance(c, RationalExpr) else RationalExpr.of(c)


@dataclass(frozen=True)
class Mismatch:
    monomial: Key
    lhs: RationalExpr
    rhs: RationalExpr
    names: Tuple[str, ...]

    def monomial_text(self) -> str:
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, self.monomial) if e]
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class Comparison:
    equal: bool
    order: int
    mismatch: Optional[Mismatch] = None

    def __bool__(self) -> bool:
        return self.equal


def graded_key(key: Key) -> Tuple:
    """Ascending total degree; within a degree the larger exponent vector first."""
    return (sum(key), tuple(-e for e in key))


class TruncatedSeries:
    """Series in ``smalls`` whose coefficients of total degree <= ``order`` are exact.

    Coefficients are :class:`RationalExpr` in the remaining (parameter) symbols.
    """

    __slots__ = ("smalls", "order", "terms")

    def __init__(self, smalls: Sequence[str], order: int, terms: Optional[Dict[Key, RationalExpr]] = None):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.smalls: Tuple[str, ...] = tuple(smalls)
        self.order = order
        self.terms: Dict[Key, RationalExpr] = terms if terms is not None else {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, smalls: Sequence[str], order: int) -> "TruncatedSeries":
        return cls(smalls, order)

    @classmethod
    def const(cls, smalls: Sequence[str], order: int, c: Coeff = 1) -> "TruncatedSeries":
        c = _rx(c)
        terms = {} if c.is_zero() else {(0,) * len(smalls): c}
        return cls(smalls, order, terms)

    @classmethod
    def from_poly(cls, p: Union[LaurentPoly, RationalExpr], smalls: Sequence[str], order: int) -> "TruncatedSeries":
        """Split a polynomial (or rational with small-free denominator) by small exponents."""
        smalls = tuple(smalls)
        den = None
        if isinstance(p, RationalExpr):
            for atom in p.den_factors:
                if any(atom.involves(s) for s in smalls):
                    raise NotFormallySmall("denominator involves a small symbol; expand it as a series")
            den = p.den_factors
            p = p.num
        terms: Dict[Key, RationalExpr] = {}
        for exps, cof in p.split(smalls).items():
            if any(e < 0 for e in exps):
                raise NegativeExponent(f"negative power of a small symbol in {exps}")
            if sum(exps) <= order:
                terms[exps] = RationalExpr(cof, dict(den) if den else None)
        return cls(smalls, order, terms)

    @classmethod
    def monomial(cls, smalls: Sequence[str], order: int, exps: Key, c: Coeff = 1) -> "TruncatedSeries":
        c = _rx(c)
        if sum(exps) > order or c.is_zero():
            return cls(smalls, order)
        return cls(smalls, order, {tuple(exps): c})

    def like(self, terms: Optional[Dict[Key, RationalExpr]] = None, order: Optional[int] = None) -> "TruncatedSeries":
        return TruncatedSeries(self.smalls, self.order if order is None else order, terms or {})

    # -- inspection ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.render()})"

    def render(self, scale: int = 1) -> str:
        from .render import render_grouped

        body = render_grouped(list(self.terms.items()), self.smalls, scale)
        if len(self.smalls) == 1:
            tail = f"O({self.smalls[0]}^{self.order + 1})"
        else:
            tail = f"O(({','.join(self.smalls)})^{self.order + 1})"
        return f"{body} + {tail}" if self.terms else tail

    def coefficient(self, exps: Key) -> RationalExpr:
        if sum(exps) > self.order:
            raise ValueError("coefficient beyond the truncation order is unknown")
        return self.terms.get(tuple(exps), RationalExpr(LaurentPoly()))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.terms.values())

    def min_degree(self) -> int:
        return min((sum(k) for k, c in self.terms.items() if not c.is_zero()), default=self.order + 1)

    def _check(self, other: "TruncatedSeries") -> None:
        if self.smalls != other.smalls:
            raise SmallSymbolMismatch(f"{self.smalls} vs {other.smalls}")

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "TruncatedSeries":
        return self.like({k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.const(self.smalls, self.order, _rx(other))
        self._check(other)
        order = min(self.order, other.order)
        out: Dict[Key, RationalExpr] = {}
        for src in (self.terms, other.terms):
            for k, c in src.items():
                if sum(k) > order:
                    continue
                prev = out.get(k)
                out[k] = c if prev is None else prev + c
        return TruncatedSeries(self.smalls, order, {k: c for k, c in out.items() if not c.is_zero()})

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.const(self.smalls, self.order, _rx(other))
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (RationalExpr, LaurentPoly, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        order = min(self.order, other.order)
        a = sorted(((sum(k), k, c) for k, c in self.terms.items() if sum(k) <= order), key=lambda t: t[0])
        b = sorted(((sum(k), k, c) for k, c in other.terms.items() if sum(k) <= order), key=lambda t: t[0])
        acc: Dict[Key, List] = {}
        for da, ka, ca in a:
            cap = order - da
            for db, kb, cb in b:
                if db > cap:
                    break
                num = ca.num * cb.num
                if not num.terms:
                    continue
                k = tuple(x + y for x, y in zip(ka, kb))
                acc.setdefault(k, []).append((num, _merge(ca.den_factors, cb.den_factors)))
        out = {}
        for k, parts in acc.items():
            s = sum_fractions(parts)
            if not s.is_zero():
                out[k] = s
        return TruncatedSeries(self.smalls, order, out)

    def __rmul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (RationalExpr, LaurentPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Coeff) -> "TruncatedSeries":
        """Multiply by a small-free coefficient."""
        if isinstance(c, LaurentPoly) and any(c.involves(s) for s in self.smalls):
            return self * TruncatedSeries.from_poly(c, self.smalls, self.order)
        c = _rx(c)
        if c.is_zero():
            return self.like({})
        out = {}
        for k, v in self.terms.items():
            w = v * c
            if not w.is_zero():
                out[k] = w
        return self.like(out)

    def shift(self, exps: Key, c: Coeff = 1) -> "TruncatedSeries":
        """Multiply by ``c * prod(smalls**exps)`` and truncate."""
        c = _rx(c)
        out = {}
        for k, v in self.terms.items():
            nk = tuple(x + y for x, y in zip(k, exps))
            if sum(nk) <= self.order:
                out[nk] = v * c
        return self.like(out)

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            return self.inverse() ** (-n)
        out = TruncatedSeries.const(self.smalls, self.order, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant coefficient must be nonzero."""
        zero = (0,) * len(self.smalls)
        a0 = self.terms.get(zero)
        if a0 is None or a0.is_zero():
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = a0.inverse()
        result: Dict[Key, RationalExpr] = {zero: inv0}
        nonconst = [(k, c) for k, c in self.terms.items() if k != zero]
        for key in _keys_by_degree(len(self.smalls), self.order):
            if key == zero:
                continue
            parts = []
            for ka, ca in nonconst:
                rest = tuple(x - y for x, y in zip(key, ka))
                if min(rest) < 0:
                    continue
                rb = result.get(rest)
                if rb is None:
                    continue
                parts.append((ca.num * rb.num, _merge(ca.den_factors, rb.den_factors)))
            if parts:
                s = sum_fractions(parts)
                if not s.is_zero():
                    result[key] = -(s * inv0)
        return self.like(result)

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self.scale(_rx(1) / _rx(other))

    def truncate(self, order: int) -> "TruncatedSeries":
        order = min(order, self.order)
        return TruncatedSeries(self.smalls, order, {k: c for k, c in self.terms.items() if sum(k) <= order})

    def map_coefficients(self, fn: Callable[[Key, RationalExpr], RationalExpr]) -> "TruncatedSeries":
        out = {}
        for k, c in self.terms.items():
            w = fn(k, c)
            if not w.is_zero():
                out[k] = w
        return self.like(out)

    # -- symbol-level operations ---------------------------------------------

    def _pos(self, name: str) -> int:
        try:
            return self.smalls.index(name)
        except ValueError:
            raise KeyError(f"{name} is not a small symbol of this series") from None

    def scale_var(self, name: str, factor: LaurentPoly) -> "TruncatedSeries":
        """Substitute ``name -> factor*name`` for a small-free monomial ``factor``."""
        i = self._pos(name)
        out = {}
        powers: Dict[int, LaurentPoly] = {}
        for k, c in self.terms.items():
            e = k[i]
            if e:
                if e not in powers:
                    powers[e] = factor ** e
                c = c * powers[e]
            out[k] = c
        return self.like(out)

    def substitute(self, bindings: Mapping[str, Union[LaurentPoly, int]]) -> "TruncatedSeries":
        """Substitute parameter symbols in every coefficient."""
        for name in bindings:
            if name in self.smalls:
                raise ValueError(f"use scale_var to rescale the small symbol {name}")
        return self.map_coefficients(lambda k, c: c.substitute(bindings))

    def dq(self, name: str, ctx: S.Context = S.DEFAULT) -> "TruncatedSeries":
        """q-derivative ``(f(x) - f(qx)) / x`` in ``name``.

        For a small symbol the order drops by one.  For a parameter symbol the
        coefficients must be polynomial in it.
        """
        from ..qkernel import dq_factor, dq_poly

        if name not in self.smalls:
            def act(k, c):
                if any(a.involves(name) for a in c.den_factors):
                    raise ValueError(f"coefficient denominator involves {name}")
                return RationalExpr(dq_poly(c.num, name, ctx), c.den_factors)

            return self.map_coefficients(act)
        if self.order == 0:
            raise ValueError("q-derivative of an order-0 series carries no information")
        i = self._pos(name)
        out = {}
        for k, c in self.terms.items():
            e = k[i]
            if e:
                out[k[:i] + (e - 1,) + k[i + 1:]] = c * dq_factor(e, ctx)
        return TruncatedSeries(self.smalls, self.order - 1, out)

    def derivative(self, name: str) -> "TruncatedSeries":
        """Ordinary formal derivative in the small symbol ``name``; order drops by one."""
        i = self._pos(name)
        out = {}
        for k, c in self.terms.items():
            e = k[i]
            if e == 0:
                continue
            out[k[:i] + (e - 1,) + k[i + 1:]] = c * e
        if self.order == 0:
            raise ValueError("derivative of an order-0 series carries no information")
        return TruncatedSeries(self.smalls, self.order - 1, out)

    def coefficients_free_of(self, name: str) -> bool:
        for c in self.terms.values():
            if c.num.involves(name) or any(a.involves(name) for a in c.den_factors):
                return False
        return True

    def to_poly(self) -> LaurentPoly:
        """Reassemble as a polynomial (coefficients must have trivial denominators)."""
        out = LaurentPoly()
        for k, c in self.terms.items():
            if c.den_factors:
                raise ValueError("coefficient has a nontrivial denominator")
            mono = LaurentPoly.monomial(1, dict(zip(self.smalls, k)))
            out = out + c.num * mono
        return out


def _keys_by_degree(n: int, order: int) -> Iterable[Key]:
    for d in range(order + 1):
        yield from _compositions(d, n)


def _compositions(total: int, parts: int) -> Iterable[Key]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def series_equal(a: TruncatedSeries, b: TruncatedSeries) -> Comparison:
    """Exact comparison to min(orders); reports the graded-first mismatch."""
    if a.smalls != b.smalls:
        raise SmallSymbolMismatch(f"{a.smalls} vs {b.smalls}")
    order = min(a.order, b.order)
    keys = {k for k in a.terms if sum(k) <= order} | {k for k in b.terms if sum(k) <= order}
    zero = RationalExpr(LaurentPoly())
    for k in sorted(keys, key=graded_key):
        lhs = a.terms.get(k, zero)
        rhs = b.terms.get(k, zero)
        if not lhs == rhs:
            return Comparison(False, order, Mismatch(k, lhs, rhs, a.smalls))
    return Comparison(True, order)
