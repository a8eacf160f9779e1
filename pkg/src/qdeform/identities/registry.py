"""The identity registry: ordered, immutable, looked up by id."""

from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Tuple

from .. import qkernel as K
from ..algebra.poly import LaurentPoly
from ..algebra.rational import RationalExpr
from ..special import P, eq_deformed
from . import catalog_kernel, catalog_rn, catalog_series, errata
from .common import multi_sum
from .engine import (IdentitySpec, UnknownIdentity, VerificationConfig, VerificationReport, run_many,
                     verify_spec)


@lru_cache(maxsize=None)
def _main() -> Tuple[IdentitySpec, ...]:
    specs = tuple(catalog_kernel.entries() + catalog_rn.entries() + catalog_series.entries())
    ids = [s.id for s in specs]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate identity ids")
    return specs


@lru_cache(maxsize=None)
def _errata() -> Tuple[IdentitySpec, ...]:
    return tuple(errata.entries())


def registry() -> List[IdentitySpec]:
    return list(_main())


def errata_registry() -> List[IdentitySpec]:
    """Displayed forms that are known to fail; each mirrors a main entry."""
    return list(_errata())


def lookup(ident: str, errata: bool = False) -> IdentitySpec:
    for spec in (_errata() if errata else _main()):
        if spec.id == ident:
            return spec
    raise UnknownIdentity(ident)


def select(prefix: Optional[str] = None, errata: bool = False) -> List[IdentitySpec]:
    specs = _errata() if errata else _main()
    return [s for s in specs if prefix is None or s.id.startswith(prefix)]


def verify(ident: str, config: VerificationConfig = VerificationConfig(), errata: bool = False) -> VerificationReport:
    return verify_spec(lookup(ident, errata), config)


def verify_all(config: VerificationConfig = VerificationConfig(), prefix: Optional[str] = None,
               jobs: int = 1, errata: bool = False) -> List[VerificationReport]:
    return run_many(select(prefix, errata), config, jobs, errata)


# -- negative control ------------------------------------------------------------------


def _perturbed_qbinomial(bc):
    # R_n built with u^k in place of u^C(k,2); the right side is untouched
    f = bc.frame
    x, y, z, u = P("x"), P("y"), P("z"), P("u")

    def wrong_rn(n):
        out = LaurentPoly()
        for k in range(n + 1):
            out = out + K.gauss_binomial(n, k, bc.ctx) * u ** k * x ** (n - k) * y ** k
        return out

    lhs = multi_sum(f, ["z"], lambda n: RationalExpr(wrong_rn(n)) * f.inv_qq(n))
    return lhs, eq_deformed(y * z, u, f) * f.inv_inf(x * z)


def perturbed_qbinomial() -> IdentitySpec:
    """genfunc.qbinomial with a deliberately wrong builder; must not verify."""
    spec = lookup("genfunc.qbinomial")
    return IdentitySpec(
        id="control.perturbed_qbinomial",
        anchor=spec.anchor,
        label="generalized q-binomial theorem with u^C(n,2) replaced by u^n",
        build=_perturbed_qbinomial,
        smalls=spec.smalls,
        default_order=spec.default_order,
        notes="Negative control for the engine.",
    )
