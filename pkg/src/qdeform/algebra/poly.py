"""Sparse multivariate Laurent polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from . import symbols as S

# Exact scalars are Python ints or Fractions; Fractions equal to ints are
# folded back to int so that hashing and rendering stay canonical.
ExactRational = Fraction
Scalar = Union[int, Fraction]


class SubstitutionNotInvertible(ValueError):
    """A non-monomial was substituted for a symbol carrying a negative power."""


class NegativeExponent(ValueError):
    """An operation needs non-negative powers of a symbol and found a negative one."""


def _norm(c: Scalar) -> Scalar:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Finite map from packed exponent keys to nonzero rational coefficients.

    Values are immutable by convention; every operation returns a new object.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Dict[int, Scalar]] = None, _trusted: bool = False):
        if terms is None:
            terms = {}
        elif not _trusted:
            terms = {k: _norm(c) for k, c in terms.items() if c != 0}
        self.terms: Dict[int, Scalar] = terms
        self._hash: Optional[int] = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        c = _norm(c)
        return cls({0: c} if c != 0 else {}, _trusted=True)

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "LaurentPoly":
        return cls({exp * S.unit_key(name): 1}, _trusted=True)

    @classmethod
    def monomial(cls, coeff: Scalar = 1, exps: Optional[Mapping[str, int]] = None) -> "LaurentPoly":
        coeff = _norm(coeff)
        if coeff == 0:
            return cls()
        return cls({S.encode_names(exps or {}): coeff}, _trusted=True)

    @classmethod
    def from_key(cls, key: int, coeff: Scalar = 1) -> "LaurentPoly":
        coeff = _norm(coeff)
        return cls({key: coeff} if coeff != 0 else {}, _trusted=True)

    @classmethod
    def qpow(cls, e, ctx: S.Context = S.DEFAULT, coeff: Scalar = 1) -> "LaurentPoly":
        """The monomial ``coeff * q**e`` in context ``ctx`` (e may be 1/2 at scale 2)."""
        return cls.from_key(ctx.q_exponent(e), coeff)

    # -- basic protocol -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from .render import render_poly

        return f"LaurentPoly({render_poly(self)})"

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, 0)

    def single_term(self) -> Tuple[int, Scalar]:
        if len(self.terms) != 1:
            raise ValueError("polynomial is not a monomial")
        return next(iter(self.terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.terms.items()}, _trusted=True)

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = _norm(v)
                else:
                    del out[k]
        return LaurentPoly(out, _trusted=True)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if cb == 1:
                return LaurentPoly({ka + kb: ca for ka, ca in a.items()}, _trusted=True)
            return LaurentPoly({ka + kb: _norm(ca * cb) for ka, ca in a.items()}, _trusted=True)
        out: Dict[int, Scalar] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly(out)

    def __rmul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "LaurentPoly":
        c = _norm(c)
        if c == 0:
            return LaurentPoly()
        if c == 1:
            return self
        return LaurentPoly({k: _norm(v * c) for k, v in self.terms.items()}, _trusted=True)

    def shift(self, key: int) -> "LaurentPoly":
        """Multiply by the monomial with packed key ``key``."""
        if key == 0:
            return self
        return LaurentPoly({k + key: c for k, c in self.terms.items()}, _trusted=True)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (k, c), = self.terms.items()
            return LaurentPoly({-k * (-n): _norm(Fraction(1, 1) / c ** (-n))}, _trusted=True)
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monomial_inverse(self) -> "LaurentPoly":
        return self ** -1

    # -- structure ----------------------------------------------------------

    def exponents_of(self, name: str) -> Iterable[int]:
        idx = S.sym_index(name)
        return (S.exponent(k, idx) for k in self.terms)

    def degree_in(self, name: str) -> int:
        return max(self.exponents_of(name), default=0)

    def min_degree_in(self, name: str) -> int:
        return min(self.exponents_of(name), default=0)

    def symbols(self) -> set:
        out = set()
        for k in self.terms:
            out.update(S.decode(k))
        return {S.sym_name(i) for i in out}

    def involves(self, name: str) -> bool:
        idx = S.sym_index(name)
        return any(S.exponent(k, idx) for k in self.terms)

    def valuation(self, name: str) -> int:
        """Lowest power of ``name`` occurring (the name-adic valuation)."""
        if not self.terms:
            raise ValueError("valuation of zero")
        return self.min_degree_in(name)

    def split(self, names: Tuple[str, ...]) -> Dict[Tuple[int, ...], "LaurentPoly"]:
        """Group terms by the exponents of ``names``; values are the cofactors."""
        idxs = [S.sym_index(n) for n in names]
        units = [1 << (S.BITS * i) for i in idxs]
        groups: Dict[Tuple[int, ...], Dict[int, Scalar]] = {}
        for k, c in self.terms.items():
            exps = tuple(S.exponent(k, i) for i in idxs)
            rest = k - sum(e * u for e, u in zip(exps, units))
            groups.setdefault(exps, {})[rest] = c
        return {e: LaurentPoly(t, _trusted=True) for e, t in groups.items()}

    def coefficient_of(self, name: str, power: int) -> "LaurentPoly":
        return self.split((name,)).get((power,), LaurentPoly())

    # -- substitution -------------------------------------------------------

    def substitute(self, bindings: Mapping[str, Union["LaurentPoly", Scalar]]) -> "LaurentPoly":
        """Replace symbols by polynomials; negative powers need monomial images."""
        if not bindings or not self.terms:
            return self
        binds = []
        for name, value in bindings.items():
            value = _coerce(value)
            binds.append((S.sym_index(name), value))
        # monomial images act on keys directly
        mono = [(i, v) for i, v in binds if len(v.terms) == 1]
        general = [(i, v) for i, v in binds if len(v.terms) != 1]
        out = self
        if mono:
            out = out._subst_monomials(mono)
        for idx, value in general:
            out = out._subst_general(idx, value)
        return out

    def _subst_monomials(self, binds) -> "LaurentPoly":
        res: Dict[int, Scalar] = {}
        get = res.get
        prepared = []
        for idx, value in binds:
            (vk, vc), = value.terms.items()
            prepared.append((idx, vk - (1 << (S.BITS * idx)), vc))
        for k, c in self.terms.items():
            nk = k
            for idx, delta, vc in prepared:
                e = S.exponent(k, idx)
                if e:
                    nk += e * delta
                    if vc != 1:
                        c = c * (vc ** e if e > 0 else Fraction(1) / vc ** (-e))
            res[nk] = get(nk, 0) + c
        return LaurentPoly(res)

    def _subst_general(self, idx: int, value: "LaurentPoly") -> "LaurentPoly":
        unit = 1 << (S.BITS * idx)
        by_power: Dict[int, Dict[int, Scalar]] = {}
        for k, c in self.terms.items():
            e = S.exponent(k, idx)
            if e < 0:
                raise SubstitutionNotInvertible(
                    f"symbol {S.sym_name(idx)} occurs with exponent {e};"
                    " only a monomial may replace it"
                )
            by_power.setdefault(e, {})[k - e * unit] = c
        out = LaurentPoly()
        powers = {0: LaurentPoly.const(1)}
        for e in sorted(by_power):
            if e not in powers:
                powers[e] = value ** e
            out = out + LaurentPoly(by_power[e], _trusted=True) * powers[e]
        return out

    def scale_var(self, name: str, factor: "LaurentPoly") -> "LaurentPoly":
        """``f(x) -> f(factor * x)`` for a monomial ``factor``."""
        x = LaurentPoly.var(name)
        return self.substitute({name: factor * x})

    def map_coefficients(self, fn: Callable[[Scalar], Scalar]) -> "LaurentPoly":
        return LaurentPoly({k: fn(c) for k, c in self.terms.items()})

    # -- content / normal forms ---------------------------------------------

    def content_key(self) -> int:
        """Packed key of the largest monomial dividing every term (may be Laurent)."""
        if not self.terms:
            return 0
        decoded = [S.decode(k) for k in self.terms]
        idxs = set()
        for d in decoded:
            idxs.update(d)
        mins = {i: min(d.get(i, 0) for d in decoded) for i in idxs}
        return S.encode({i: e for i, e in mins.items() if e})

    def integer_content(self) -> Fraction:
        """Positive rational c with self / c having coprime integer coefficients."""
        num_g = 0
        den_l = 1
        for c in self.terms.values():
            if type(c) is Fraction:
                num_g = gcd(num_g, c.numerator)
                den_l = den_l * c.denominator // gcd(den_l, c.denominator)
            else:
                num_g = gcd(num_g, c)
        if num_g == 0:
            return Fraction(1)
        return Fraction(num_g, den_l)


def _coerce(x) -> Optional[LaurentPoly]:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    return None


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def var(name: str, exp: int = 1) -> LaurentPoly:
    return LaurentPoly.var(name, exp)


def q(e=1, ctx: S.Context = S.DEFAULT) -> LaurentPoly:
    return LaurentPoly.qpow(e, ctx)


def poly_arith(a: LaurentPoly, b, op: str) -> LaurentPoly:
    """Dispatch ``add``/``mul``/``neg``/``pow`` (``b`` is the exponent for pow)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "pow":
        if b < 0:
            raise ValueError("pow exponent must be non-negative")
        return a ** b
    raise ValueError(f"unknown op {op!r}")


def substitute(f, bindings):
    """Substitute in a LaurentPoly or anything exposing ``substitute``."""
    return f.substitute(bindings)
