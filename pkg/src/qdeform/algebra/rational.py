"""Quotients of Laurent polynomials with factored denominators.

A denominator is kept as a multiset of *atoms*: normalized polynomials with
no monomial content, coprime integer coefficients and a positive leading
coefficient.  Binomials ``1 - c*M`` with ``c = +-1`` are split into
cyclotomic factors ``Phi_d(M0)`` so that least common multiples of
q-Pochhammer denominators stay small.  Cancellation against the numerator is
never required: equality is decided by cross-multiplication over the lcm.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from . import symbols as S
from .poly import LaurentPoly, Scalar, _norm

Den = Tuple[Tuple[LaurentPoly, int], ...]


class ZeroDivision(ZeroDivisionError):
    """Division by the zero polynomial."""


# -- cyclotomic polynomials --------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Tuple[int, ...]:
    """Integer coefficients (ascending) of the d-th cyclotomic polynomial."""
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = _divide_int_poly(poly, list(cyclotomic(e)))
    return tuple(poly)


def _divide_int_poly(num: List[int], den: List[int]) -> List[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead:
            raise ArithmeticError("inexact cyclotomic division")
        c //= lead
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact cyclotomic division")
    return out


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- atoms ---------------------------------------------------------------------


def _leading_key(p: LaurentPoly) -> int:
    """Name-based choice of a distinguished term, independent of interning order."""
    best = None
    best_sig = None
    for k in p.terms:
        d = S.decode(k)
        order = S.display_order(d)
        sig = (sum(d.values()), tuple((S.sym_name(i), d[i]) for i in order))
        if best_sig is None or sig < best_sig:
            best_sig = sig
            best = k
    return best


def normalize_atom(p: LaurentPoly) -> Tuple[Scalar, int, LaurentPoly]:
    """Write p = c * monomial(key) * atom with atom canonical; return (c, key, atom)."""
    key = p.content_key()
    if key:
        p = p.shift(-key)
    content = p.integer_content()
    lead = p.terms[_leading_key(p)]
    if lead < 0:
        content = -content
    if content != 1:
        p = p.scale(1 / content)
    return _norm(content), key, p


@lru_cache(maxsize=200_000)
def _binomial_atoms(sign: int, mono_key: int) -> Tuple[Scalar, int, Tuple[Tuple[LaurentPoly, int], ...]]:
    """Factor ``1 - sign*M`` (M the monic monomial ``mono_key``) into atoms.

    Returns (scalar, key, atoms) with scalar*monomial(key)*prod(atoms) equal
    to ``1 - sign*M`` exactly.
    """
    exps = S.decode(mono_key)
    g = 0
    for e in exps.values():
        g = gcd(g, abs(e))
    base_key = S.encode({i: e // g for i, e in exps.items()})
    if sign == 1:
        ds = _divisors(g)
    else:
        ds = [d for d in _divisors(2 * g) if g % d != 0]
    unit_c: Scalar = 1
    unit_k = 0
    atoms: Dict[LaurentPoly, int] = {}
    for d in ds:
        terms = {j * base_key: c for j, c in enumerate(cyclotomic(d)) if c}
        c, k, atom = normalize_atom(LaurentPoly(terms, _trusted=True))
        unit_c = unit_c * c
        unit_k += k
        atoms[atom] = atoms.get(atom, 0) + 1
    prod = LaurentPoly.from_key(unit_k, unit_c)
    for atom, m in atoms.items():
        prod = prod * atom ** m
    target = LaurentPoly({0: 1, mono_key: -sign})
    if prod == -target:
        unit_c = -unit_c
    elif prod != target:
        raise ArithmeticError("cyclotomic factorization failed")
    return _norm(unit_c), unit_k, tuple(atoms.items())


def factor(p: LaurentPoly) -> Tuple[Scalar, int, Dict[LaurentPoly, int]]:
    """Split p into (scalar, monomial key, {atom: multiplicity})."""
    if not p.terms:
        raise ZeroDivision("cannot factor the zero polynomial")
    if len(p.terms) == 1:
        (k, c), = p.terms.items()
        return c, k, {}
    if len(p.terms) == 2:
        (k1, c1), (k2, c2) = p.terms.items()
        if abs(c1) == abs(c2):
            # c1*m1 + c2*m2 = c1*m1*(1 - s*M) with M = m2/m1
            s = 1 if c1 == -c2 else -1
            if _first_exp_negative(k2 - k1):
                k1, k2, c1, c2 = k2, k1, c2, c1
            uc, uk, atoms = _binomial_atoms(s, k2 - k1)
            return _norm(c1 * uc), k1 + uk, dict(atoms)
    c, k, atom = normalize_atom(p)
    return c, k, {atom: 1}


def _first_exp_negative(key: int) -> bool:
    d = S.decode(key)
    if not d:
        return False
    return d[min(d)] < 0


# -- rational expressions --------------------------------------------------------


def _den_key(den: Mapping[LaurentPoly, int]) -> frozenset:
    return frozenset(den.items())


class RationalExpr:
    """``num / prod(atom**mult)`` with exact cross-multiplication equality."""

    __slots__ = ("num", "den_factors")

    def __init__(self, num: LaurentPoly, den_factors: Optional[Dict[LaurentPoly, int]] = None):
        self.num = num
        self.den_factors: Dict[LaurentPoly, int] = den_factors or {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def of(cls, x) -> "RationalExpr":
        if isinstance(x, RationalExpr):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x)
        if isinstance(x, (int, Fraction)):
            return cls(LaurentPoly.const(x))
        raise TypeError(f"cannot convert {type(x).__name__} to RationalExpr")

    @classmethod
    def fraction(cls, num, den_polys: Iterable[LaurentPoly] = ()) -> "RationalExpr":
        """num / prod(den_polys), each denominator factored into atoms."""
        out = cls.of(num)
        for d in den_polys:
            out = out.divide_poly(d)
        return out

    # -- accessors ----------------------------------------------------------

    @property
    def den(self) -> LaurentPoly:
        out = LaurentPoly.const(1)
        for atom, m in self.den_factors.items():
            for _ in range(m):
                out = out * atom
        return out

    def is_zero(self) -> bool:
        return not self.num.terms

    def is_polynomial(self) -> bool:
        return not self.den_factors

    def __repr__(self) -> str:
        from .render import render_rational

        return f"RationalExpr({render_rational(self)})"

    # -- arithmetic ---------------------------------------------------------

    def divide_poly(self, p: LaurentPoly) -> "RationalExpr":
        c, k, atoms = factor(p)
        num = self.num.shift(-k)
        if c != 1:
            num = num.scale(Fraction(1) / c if type(c) is int else 1 / c)
        if not atoms:
            return RationalExpr(num, self.den_factors)
        den = dict(self.den_factors)
        for a, m in atoms.items():
            den[a] = den.get(a, 0) + m
        return RationalExpr(num, den)

    def __neg__(self) -> "RationalExpr":
        return RationalExpr(-self.num, self.den_factors)

    def __add__(self, other) -> "RationalExpr":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        return sum_fractions([(self.num, self.den_factors), (other.num, other.den_factors)])

    __radd__ = __add__

    def __sub__(self, other) -> "RationalExpr":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalExpr":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalExpr":
        if isinstance(other, (int, Fraction)):
            return RationalExpr(self.num.scale(other), self.den_factors)
        if isinstance(other, LaurentPoly):
            return RationalExpr(self.num * other, self.den_factors)
        if not isinstance(other, RationalExpr):
            return NotImplemented
        num = self.num * other.num
        if not num.terms:
            return RationalExpr(num)
        return RationalExpr(num, _merge(self.den_factors, other.den_factors))

    __rmul__ = __mul__

    def inverse(self) -> "RationalExpr":
        if not self.num.terms:
            raise ZeroDivision("inverse of zero")
        out = RationalExpr(self.den).divide_poly(self.num)
        return out

    def __truediv__(self, other) -> "RationalExpr":
        if isinstance(other, (int, Fraction)):
            return RationalExpr(self.num.scale(Fraction(1) / other), self.den_factors)
        if isinstance(other, LaurentPoly):
            return self.divide_poly(other)
        if isinstance(other, RationalExpr):
            return (self * RationalExpr(self._expand_atoms(other.den_factors))).divide_poly(other.num)
        return NotImplemented

    @staticmethod
    def _expand_atoms(den: Mapping[LaurentPoly, int]) -> LaurentPoly:
        out = LaurentPoly.const(1)
        for atom, m in den.items():
            for _ in range(m):
                out = out * atom
        return out

    def __pow__(self, n: int) -> "RationalExpr":
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalExpr(LaurentPoly.const(1))
        for _ in range(n):
            out = out * self
        return out

    # -- equality -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den_factors == other.den_factors:
            return self.num == other.num
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("RationalExpr equality is semantic; it is not hashable")

    def cross_equal(self, other: "RationalExpr") -> bool:
        """a/b == c/d decided literally as a*d - c*b == 0."""
        return (self.num * other.den - other.num * self.den).is_zero()

    # -- structural ops -----------------------------------------------------

    def substitute(self, bindings) -> "RationalExpr":
        num = self.num.substitute(bindings)
        out = RationalExpr(num)
        for atom, m in self.den_factors.items():
            img = atom.substitute(bindings)
            if not img.terms:
                raise ZeroDivision("substitution sends a denominator factor to zero")
            for _ in range(m):
                out = out.divide_poly(img)
        return out

    def valuation(self, name: str) -> int:
        """name-adic valuation, assuming no denominator atom vanishes at name=0."""
        return self.num.valuation(name) - sum(
            a.valuation(name) * m for a, m in self.den_factors.items()
        )


def _coerce(x) -> Optional[RationalExpr]:
    if isinstance(x, RationalExpr):
        return x
    if isinstance(x, (LaurentPoly, int, Fraction)):
        return RationalExpr.of(x)
    return None


def _merge(a: Mapping[LaurentPoly, int], b: Mapping[LaurentPoly, int]) -> Dict[LaurentPoly, int]:
    if not a:
        return dict(b) if b else {}
    if not b:
        return dict(a)
    out = dict(a)
    for k, m in b.items():
        out[k] = out.get(k, 0) + m
    return out


_ATOM_POWERS: Dict[Tuple[LaurentPoly, int], LaurentPoly] = {}


def _atom_power(atom: LaurentPoly, m: int) -> LaurentPoly:
    key = (atom, m)
    val = _ATOM_POWERS.get(key)
    if val is None:
        val = atom ** m
        if len(_ATOM_POWERS) < 50_000:
            _ATOM_POWERS[key] = val
    return val


def sum_fractions(parts: List[Tuple[LaurentPoly, Mapping[LaurentPoly, int]]]) -> RationalExpr:
    """Add several num/den pairs over the least common multiple of the denominators."""
    parts = [(n, d) for n, d in parts if n.terms]
    if not parts:
        return RationalExpr(LaurentPoly())
    if len(parts) == 1:
        n, d = parts[0]
        return RationalExpr(n, dict(d))
    lcm: Dict[LaurentPoly, int] = {}
    for _, d in parts:
        for a, m in d.items():
            if lcm.get(a, 0) < m:
                lcm[a] = m
    # group parts by denominator so each multiplier is formed once
    groups: Dict[frozenset, Tuple[Mapping[LaurentPoly, int], LaurentPoly]] = {}
    for n, d in parts:
        key = _den_key(d)
        prev = groups.get(key)
        groups[key] = (d, n if prev is None else prev[1] + n)
    total = LaurentPoly()
    for d, n in groups.values():
        if not n.terms:
            continue
        mult = None
        for a, m in lcm.items():
            extra = m - d.get(a, 0)
            if extra:
                f = _atom_power(a, extra)
                mult = f if mult is None else mult * f
        total = total + (n if mult is None else n * mult)
    if not total.terms:
        return RationalExpr(total)
    return RationalExpr(total, lcm)


ZERO = RationalExpr(LaurentPoly())
ONE = RationalExpr(LaurentPoly.const(1))
