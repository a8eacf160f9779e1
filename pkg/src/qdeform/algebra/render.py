"""Deterministic text rendering.

Terms are listed by ascending total degree; ties put the lexicographically
larger exponent vector first (symbols in display order).  Top-level terms are
joined with `` + `` / `` - ``; nested coefficients are compact and
parenthesized, e.g. ``u*x^2 + (1+q)*x*y + v*y^2``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import symbols as S
from .poly import LaurentPoly


def _fmt_exp(e) -> str:
    if isinstance(e, Fraction) and e.denominator != 1:
        return f"({e.numerator}/{e.denominator})"
    e = int(e)
    return str(e) if e >= 0 else f"({e})"


def _factor_str(name: str, e) -> str:
    if e == 1:
        return name
    return f"{name}^{_fmt_exp(e)}"


def _monomial_parts(exps: Dict[int, int], scale: int) -> List[Tuple[str, object]]:
    parts = []
    for i in S.display_order(exps):
        e = exps[i]
        if i == 0:
            e = Fraction(e, scale)
            if e.denominator == 1:
                e = e.numerator
        parts.append((S.sym_name(i), e))
    return parts


def _sort_key(exps: Dict[int, int], scale: int):
    parts = _monomial_parts(exps, scale)
    total = sum(Fraction(e) for _, e in parts)
    # larger exponent vector first within a degree
    return (total, tuple((name, -Fraction(e)) for name, e in parts))


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _terms(p: LaurentPoly, scale: int) -> List[Tuple[str, object]]:
    """(unsigned term text, signed coefficient) in canonical order."""
    items = []
    for k, c in p.terms.items():
        exps = S.decode(k)
        items.append((_sort_key(exps, scale), exps, c))
    items.sort(key=lambda t: t[0])
    out = []
    for _, exps, c in items:
        mono = "*".join(_factor_str(n, e) for n, e in _monomial_parts(exps, scale))
        a = abs(c)
        if not mono:
            text = _fmt_coeff(a)
        elif a == 1:
            text = mono
        else:
            text = f"{_fmt_coeff(a)}*{mono}"
        out.append((text, c))
    return out


def render_poly(p: LaurentPoly, scale: int = 1, compact: bool = False) -> str:
    if not p.terms:
        return "0"
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    chunks = []
    for i, (text, c) in enumerate(_terms(p, scale)):
        if i == 0:
            chunks.append(text if c > 0 else f"-{text}")
        else:
            chunks.append((plus if c > 0 else minus) + text)
    return "".join(chunks)


def _atom_order(atom: LaurentPoly, scale: int) -> Tuple:
    return (len(atom.terms), render_poly(atom, scale, compact=True))


def render_rational(r, scale: int = 1) -> str:
    num = render_poly(r.num, scale, compact=True)
    if not r.den_factors:
        return num
    if len(r.num.terms) > 1:
        num = f"({num})"
    factors = []
    for atom, m in sorted(r.den_factors.items(), key=lambda am: _atom_order(am[0], scale)):
        text = render_poly(atom, scale, compact=True)
        if len(atom.terms) > 1:
            text = f"({text})"
        factors.append(text if m == 1 else f"{text}^{m}")
    den = factors[0] if len(factors) == 1 else f"({'*'.join(factors)})"
    return f"{num}/{den}"


def _coefficient_text(coeff, scale: int) -> Tuple[str, int]:
    """Render a coefficient for use as a multiplier; returns (text, sign)."""
    from .rational import RationalExpr

    if isinstance(coeff, RationalExpr) and coeff.den_factors:
        sign = 1
        if len(coeff.num.terms) == 1 and next(iter(coeff.num.terms.values())) < 0:
            coeff, sign = -coeff, -1
        return render_rational(coeff, scale), sign
    num = coeff.num if isinstance(coeff, RationalExpr) else coeff
    if len(num.terms) == 1:
        (text, c), = _terms(num, scale)
        return text, (1 if c > 0 else -1)
    return f"({render_poly(num, scale, compact=True)})", 1


def render_grouped(groups: Sequence[Tuple[Tuple[int, ...], object]], names: Sequence[str], scale: int = 1) -> str:
    """Render ``sum coeff * prod(names**exps)`` with coefficients nested."""
    if not groups:
        return "0"

    def key(item):
        exps = item[0]
        return (sum(exps), tuple(-e for e in exps))

    chunks = []
    for i, (exps, coeff) in enumerate(sorted(groups, key=key)):
        mono = "*".join(_factor_str(n, e) for n, e in zip(names, exps) if e)
        ctext, sign = _coefficient_text(coeff, scale)
        if not mono:
            text = ctext
        elif ctext == "1":
            text = mono
        else:
            text = f"{ctext}*{mono}"
        if i == 0:
            chunks.append(text if sign > 0 else f"-{text}")
        else:
            chunks.append((" + " if sign > 0 else " - ") + text)
    return "".join(chunks)


def render_in(p: LaurentPoly, main: Sequence[str], scale: int = 1) -> str:
    """Render p as a polynomial in ``main`` with coefficients in the other symbols."""
    groups = list(p.split(tuple(main)).items())
    return render_grouped(groups, main, scale)
