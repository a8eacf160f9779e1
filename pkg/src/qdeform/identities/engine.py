"""Identity specs, verification config/report and the comparison engine."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..algebra import symbols as S
from ..algebra.poly import LaurentPoly
from ..algebra.rational import RationalExpr
from ..algebra.render import render_poly, render_rational
from ..algebra.series import TruncatedSeries, series_equal
from ..special import Frame

STATUSES = ("verified", "mismatch", "error", "skipped")


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class Check:
    """One comparison inside a family instance."""

    label: str
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class BuildContext:
    order: int
    ctx: S.Context
    params: Mapping[str, int]
    smalls: Tuple[str, ...] = ()

    @property
    def frame(self) -> Frame:
        return Frame(self.smalls, self.order, self.ctx)

    def __getitem__(self, name: str) -> int:
        return self.params[name]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    anchor: str
    label: str
    build: Callable[[BuildContext], Any]
    smalls: Tuple[str, ...] = ()
    family: Mapping[str, Tuple[int, int]] = field(default_factory=dict)
    family_filter: Optional[Callable[[Mapping[str, int]], bool]] = None
    required_scale: int = 1
    default_order: Optional[int] = 8
    min_order: int = 0
    substitutions: Mapping[str, str] = field(default_factory=dict)
    notes: str = ""

    @property
    def is_series(self) -> bool:
        return self.default_order is not None

    def instances(self, overrides: Mapping[str, Tuple[int, int]] = ()) -> List[Dict[str, int]]:
        ranges = self.family_ranges(overrides)
        names = list(ranges)
        out = []
        for values in itertools.product(*(range(lo, hi + 1) for lo, hi in ranges.values())):
            inst = dict(zip(names, values))
            if self.family_filter is None or self.family_filter(inst):
                out.append(inst)
        return out

    def family_ranges(self, overrides: Mapping[str, Tuple[int, int]] = ()) -> Dict[str, Tuple[int, int]]:
        ranges = dict(self.family)
        for k, v in dict(overrides).items():
            if k in ranges:
                ranges[k] = tuple(v)
        return ranges


@dataclass(frozen=True)
class VerificationConfig:
    order: Optional[int] = None
    families: Mapping[str, Tuple[int, int]] = field(default_factory=dict)
    scale: int = 2
    time_budget: Optional[float] = None

    def __post_init__(self):
        if self.order is not None and self.order < 0:
            raise ValueError("order must be non-negative")
        if self.scale < 1:
            raise ValueError("scale must be positive")

    def order_for(self, spec: IdentitySpec) -> Optional[int]:
        if not spec.is_series:
            return None
        base = spec.default_order if self.order is None else self.order
        return max(base, spec.min_order)


@dataclass
class VerificationReport:
    id: str
    status: str
    order: Optional[int]
    family_ranges: Dict[str, List[int]]
    first_mismatch: Optional[Dict[str, str]]
    elapsed_ms: float
    anchor: str
    notes: str = ""
    substitutions: Dict[str, str] = field(default_factory=dict)
    reason: str = ""
    instances: int = 0

    def to_json(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "status": self.status,
            "order": self.order,
            "family_ranges": self.family_ranges,
            "first_mismatch": self.first_mismatch,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "anchor": self.anchor,
            "notes": self.notes,
            "substitutions": self.substitutions,
            "reason": self.reason,
            "instances": self.instances,
        }

    def text(self) -> str:
        head = f"{self.status:<9} {self.id}"
        if self.status == "verified":
            if self.order is not None:
                head += f"  verified to order {self.order}"
            if self.family_ranges:
                head += "  " + " ".join(f"{k}={lo}..{hi}" for k, (lo, hi) in self.family_ranges.items())
        elif self.status == "mismatch" and self.first_mismatch:
            m = self.first_mismatch
            head += f"  at {m['monomial']}: lhs={m['lhs']} rhs={m['rhs']}"
        elif self.reason:
            head += f"  ({self.reason})"
        return head


REPORT_SCHEMA = {
    "type": "object",
    "required": ["id", "status", "order", "family_ranges", "first_mismatch", "elapsed_ms", "anchor"],
    "properties": {
        "id": {"type": "string"},
        "status": {"enum": list(STATUSES)},
        "order": {"type": ["integer", "null"]},
        "family_ranges": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "first_mismatch": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["monomial", "lhs", "rhs"],
                    "properties": {
                        "monomial": {"type": "string"},
                        "lhs": {"type": "string"},
                        "rhs": {"type": "string"},
                    },
                },
            ]
        },
        "elapsed_ms": {"type": "number", "minimum": 0},
        "anchor": {"type": "string", "minLength": 1},
    },
}


# -- comparison ---------------------------------------------------------------


def _render(value, scale: int) -> str:
    if isinstance(value, LaurentPoly):
        return render_poly(value, scale)
    if isinstance(value, RationalExpr):
        return render_rational(value, scale)
    if isinstance(value, TruncatedSeries):
        return value.render(scale)
    return str(value)


def _as_rational(v) -> RationalExpr:
    return v if isinstance(v, RationalExpr) else RationalExpr.of(v)


def compare(lhs, rhs, scale: int = 1) -> Optional[Dict[str, str]]:
    """None when equal, else {monomial, lhs, rhs} for the first difference."""
    if isinstance(lhs, TruncatedSeries) or isinstance(rhs, TruncatedSeries):
        if not isinstance(lhs, TruncatedSeries):
            lhs = TruncatedSeries.const(rhs.smalls, rhs.order, _as_rational(lhs))
        if not isinstance(rhs, TruncatedSeries):
            rhs = TruncatedSeries.const(lhs.smalls, lhs.order, _as_rational(rhs))
        res = series_equal(lhs, rhs)
        if res.equal:
            return None
        m = res.mismatch
        return {
            "monomial": m.monomial_text(),
            "lhs": render_rational(m.lhs, scale),
            "rhs": render_rational(m.rhs, scale),
        }
    if isinstance(lhs, int) and isinstance(rhs, int):
        return None if lhs == rhs else {"monomial": "1", "lhs": str(lhs), "rhs": str(rhs)}
    if isinstance(lhs, LaurentPoly) and isinstance(rhs, LaurentPoly):
        if lhs == rhs:
            return None
        diff = lhs - rhs
        key = min(diff.terms, key=lambda k: _mono_sort(k, scale))
        mono = LaurentPoly.from_key(key)
        return {
            "monomial": render_poly(mono, scale),
            "lhs": str(lhs.terms.get(key, 0)),
            "rhs": str(rhs.terms.get(key, 0)),
        }
    a, b = _as_rational(lhs), _as_rational(rhs)
    if a == b:
        return None
    return {"monomial": "1", "lhs": render_rational(a, scale), "rhs": render_rational(b, scale)}


def _mono_sort(key: int, scale: int):
    from ..algebra.render import _sort_key

    return _sort_key(S.decode(key), scale)


def _normalize_checks(result) -> List[Check]:
    if isinstance(result, Check):
        return [result]
    if isinstance(result, tuple) and len(result) == 2:
        return [Check("", result[0], result[1])]
    out = []
    for item in result:
        out.extend(_normalize_checks(item))
    return out


# -- verification ----------------------------------------------------------------


def verify_spec(spec: IdentitySpec, config: VerificationConfig = VerificationConfig()) -> VerificationReport:
    t0 = time.perf_counter()
    order = config.order_for(spec)
    ranges = spec.family_ranges(config.families)
    report = VerificationReport(
        id=spec.id,
        status="verified",
        order=order,
        family_ranges={k: [lo, hi] for k, (lo, hi) in ranges.items()},
        first_mismatch=None,
        elapsed_ms=0.0,
        anchor=spec.anchor,
        notes=spec.notes,
        substitutions=dict(spec.substitutions),
    )
    if config.scale % spec.required_scale:
        report.status = "skipped"
        report.reason = f"needs base scale divisible by {spec.required_scale}, have {config.scale}"
        report.elapsed_ms = (time.perf_counter() - t0) * 1000
        return report
    ctx = S.Context(spec.required_scale)
    try:
        for inst in spec.instances(config.families):
            if config.time_budget is not None and time.perf_counter() - t0 > config.time_budget:
                report.status = "error"
                report.reason = f"time budget of {config.time_budget}s exceeded"
                break
            bc = BuildContext(order if order is not None else 0, ctx, inst, spec.smalls)
            for check in _normalize_checks(spec.build(bc)):
                mismatch = compare(check.lhs, check.rhs, ctx.scale)
                if mismatch is not None:
                    where = ", ".join(f"{k}={v}" for k, v in inst.items())
                    prefix = "; ".join(p for p in (where, check.label) if p)
                    if prefix:
                        mismatch["monomial"] = f"[{prefix}] {mismatch['monomial']}"
                    report.status = "mismatch"
                    report.first_mismatch = mismatch
                    break
            report.instances += 1
            if report.status != "verified":
                break
    except S.ScaleUnavailable as exc:
        report.status = "skipped"
        report.reason = f"scale unavailable: {exc}"
    except Exception as exc:  # reported, never swallowed silently
        report.status = "error"
        report.reason = f"{type(exc).__name__}: {exc}"
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


def _verify_by_id(args):
    ident, config, errata = args
    from .registry import lookup

    return verify_spec(lookup(ident, errata), config)


def run_many(specs: Sequence[IdentitySpec], config: VerificationConfig, jobs: int = 1,
             errata: bool = False) -> List[VerificationReport]:
    """Verify in registry order; with jobs > 1 entries run in worker processes."""
    if jobs <= 1 or len(specs) <= 1:
        return [verify_spec(s, config) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_by_id, [(s.id, config, errata) for s in specs]))


def summarize(reports: Iterable[VerificationReport]) -> Dict[str, int]:
    counts = {s: 0 for s in STATUSES}
    for r in reports:
        counts[r.status] += 1
    counts["total"] = sum(counts[s] for s in STATUSES)
    return counts
