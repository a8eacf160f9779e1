"""Command line front end: list, expand, verify.

Exit codes: 0 ok, 1 mismatch or error in a report, 2 usage or unknown id,
3 the requested object needs a base scale the context lacks.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .algebra import symbols as S
from .algebra.poly import LaurentPoly
from .algebra.render import render_in
from .identities import UnknownIdentity, VerificationConfig, lookup, select, summarize
from .identities.engine import run_many
from .special import Frame, eq_deformed, named_polys, phi, r_poly

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3

EXPANDABLE = ("rn", "hn", "sw", "cauchy", "exton", "eq_deformed", "phi")
_POLY_KIND = {"hn": "rogers_szego_h", "sw": "stieltjes_wigert_S", "cauchy": "cauchy_P", "exton": "exton_E"}
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*|\d+)(?:\^(-?\d+(?:/\d+)?))?$")


class UsageError(ValueError):
    pass


# -- parameter parsing ------------------------------------------------------------------


def parse_monomial(text: str, ctx: S.Context) -> LaurentPoly:
    """'-2*q^3*x', 'q^1/2', 'a', '0': a signed product of integers and symbol powers."""
    text = text.strip().replace(" ", "")
    if not text:
        raise UsageError("empty value")
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    out = LaurentPoly.const(sign)
    for part in text.split("*"):
        m = _FACTOR.match(part)
        if not m:
            raise UsageError(f"cannot read {part!r}; use products like 2*q^3*x")
        base, exp = m.group(1), Fraction(m.group(2) or 1)
        if base.isdigit():
            if exp.denominator != 1 or exp < 0:
                raise UsageError(f"integer powers only for constants: {part!r}")
            out = out * LaurentPoly.const(int(base) ** int(exp))
        elif base == "q":
            out = out * LaurentPoly.qpow(exp, ctx)
        else:
            if exp.denominator != 1:
                raise UsageError(f"fractional powers only for q: {part!r}")
            out = out * LaurentPoly.var(base) ** int(exp)
    return out


def parse_params(tokens: Sequence[str]) -> Dict[str, str]:
    params = {}
    for tok in tokens:
        if "=" not in tok:
            raise UsageError(f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        params[k.strip()] = v.strip()
    return params


def parse_family(items: Sequence[str]) -> Dict[str, tuple]:
    out = {}
    for item in items or ():
        m = re.match(r"^(\w+)=(-?\d+):(-?\d+)$", item)
        if not m:
            raise UsageError(f"family override must look like n=0:4, got {item!r}")
        lo, hi = int(m.group(2)), int(m.group(3))
        if lo > hi:
            raise UsageError(f"empty range in {item!r}")
        out[m.group(1)] = (lo, hi)
    return out


# -- commands -------------------------------------------------------------------------


def cmd_list(args) -> int:
    specs = select(args.prefix, errata=args.errata)
    if args.json:
        rows = [{"id": s.id, "anchor": s.anchor, "label": s.label, "required_scale": s.required_scale,
                 "default_order": s.default_order,
                 "family_ranges": {k: list(v) for k, v in s.family.items()}} for s in specs]
        print(json.dumps(rows, indent=2, sort_keys=True))
    else:
        for s in specs:
            scale = "  [scale 2]" if s.required_scale == 2 else ""
            print(f"{s.id:<32} {s.label}{scale}")
    return EXIT_OK


def _get_int(params, key, default=None) -> int:
    if key not in params:
        if default is None:
            raise UsageError(f"missing parameter {key}=...")
        return default
    try:
        value = int(params[key])
    except ValueError:
        raise UsageError(f"{key} must be an integer") from None
    if value < 0:
        raise UsageError(f"{key} must be non-negative")
    return value


def expand(what: str, params: Dict[str, str], order: int, scale: int) -> str:
    ctx = S.Context(scale)
    val = lambda key, default: parse_monomial(params.get(key, default), ctx)
    if what == "rn":
        n = _get_int(params, "n")
        p = r_poly(n, val("x", "x"), val("y", "y"), val("u", "u"), val("v", "v"), ctx)
        return render_in(p, ["x", "y"], scale)
    if what in _POLY_KIND:
        n = _get_int(params, "n")
        p = named_polys(_POLY_KIND[what], n, val("x", "x"), val("y", "y"), ctx)
        return render_in(p, ["x", "y"], scale)
    if what == "eq_deformed":
        z = val("z", "z")
        frame = Frame(_smalls(z), order, ctx)
        return eq_deformed(z, val("u", "u"), frame).render(scale)
    if what == "phi":
        upper = [parse_monomial(t, ctx) for t in params.get("upper", "a,b").split(",") if t]
        lower = [parse_monomial(t, ctx) for t in params.get("lower", "c").split(",") if t]
        z = val("z", "z")
        u = val("u", "1") if "u" in params else None
        base = Fraction(params.get("base", "1"))
        frame = Frame(_smalls(z), order, ctx)
        return phi(upper, lower, z, frame, u=u, base=base).render(scale)
    raise UsageError(f"cannot expand {what!r}")


def _smalls(z: LaurentPoly) -> tuple:
    names = tuple(sorted(z.symbols() - {"q"}))
    if not names:
        raise UsageError("the argument z needs at least one symbol to serve as the series variable")
    return names


def cmd_expand(args) -> int:
    params = parse_params(args.params)
    print(expand(args.what, params, args.order if args.order is not None else 6, args.scale or 1))
    return EXIT_OK


def cmd_verify(args) -> int:
    config = VerificationConfig(order=args.order, families=parse_family(args.family), scale=args.scale or 2,
                                time_budget=args.budget)
    if args.all or args.id is None:
        specs = select(args.prefix, errata=args.errata)
    else:
        specs = [lookup(args.id, errata=args.errata)]
    reports = run_many(specs, config, jobs=args.jobs, errata=args.errata)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.text())
        counts = summarize(reports)
        print(" ".join(f"{k}={counts[k]}" for k in ("verified", "mismatch", "error", "skipped", "total")))
    if args.errata:
        # the literal forms are expected to fail; any that verifies is news
        return EXIT_MISMATCH if any(r.status in ("verified", "error") for r in reports) else EXIT_OK
    return EXIT_MISMATCH if any(r.status in ("mismatch", "error") for r in reports) else EXIT_OK


# -- parser ------------------------------------------------------------------------------


def _add_verify_flags(p):
    p.add_argument("--order", type=int, help="truncation order N (default: per identity)")
    p.add_argument("--family", action="append", metavar="NAME=LO:HI", help="override a family range")
    p.add_argument("--scale", type=int, choices=(1, 2), help="base scale; default 2 so sqrt(q) entries run")
    p.add_argument("--json", action="store_true", help="JSON array of reports on stdout")
    p.add_argument("--jobs", type=int, default=1, help="parallel verifications (default 1)")
    p.add_argument("--errata", action="store_true",
                   help="run the literal displayed forms; exit 0 when every one fails as expected")
    p.add_argument("--prefix", help="restrict to ids starting with this prefix")
    p.add_argument("--budget", type=float, help="time budget in seconds per identity")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qdeform", description="Exact q-series identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list registry ids")
    p.add_argument("prefix", nargs="?", help="id prefix filter")
    p.add_argument("--json", action="store_true")
    p.add_argument("--errata", action="store_true", help="list the literal-form registry instead")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("expand", help="render a named polynomial or series",
                       description="Parameters are key=value with values like 2*q^3*x. "
                                   "The default scale is 1; exton needs --scale 2.")
    p.add_argument("what", choices=EXPANDABLE)
    p.add_argument("params", nargs="*", help="n=3 x=x y=q*y u=u v=v z=z upper=a,b lower=c base=1/2")
    p.add_argument("--order", type=int, help="series truncation order (default 6)")
    p.add_argument("--scale", type=int, choices=(1, 2), help="base scale (default 1)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="verify one identity or all of them")
    p.add_argument("id", nargs="?")
    p.add_argument("--all", action="store_true")
    _add_verify_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", help="same as verify --all")
    _add_verify_flags(p)
    p.set_defaults(func=cmd_verify, all=True, id=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if getattr(args, "order", None) is not None and args.order < 0:
            raise UsageError("--order must be non-negative")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except UnknownIdentity as exc:
        print(f"unknown identity: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except S.ScaleUnavailable as exc:
        print(f"scale unavailable: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except (UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
