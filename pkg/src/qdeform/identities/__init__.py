"""Registry of verifiable identities and the exact comparison engine."""

from .engine import (REPORT_SCHEMA, BuildContext, Check, IdentitySpec, UnknownIdentity, VerificationConfig,
                     VerificationReport, compare, summarize, verify_spec)
from .registry import (errata_registry, lookup, perturbed_qbinomial, registry, select, verify, verify_all)

__all__ = [
    "REPORT_SCHEMA", "BuildContext", "Check", "IdentitySpec", "UnknownIdentity", "VerificationConfig",
    "VerificationReport", "compare", "summarize", "verify_spec", "errata_registry", "lookup",
    "perturbed_qbinomial", "registry", "select", "verify", "verify_all",
]
