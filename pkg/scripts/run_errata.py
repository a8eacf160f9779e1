"""Run the literal displayed forms and show where each one first breaks.

Each errata entry pairs with a main entry holding the corrected reading; the
script checks both so a regression in either direction is visible.
"""

import sys
from dataclasses import dataclass

from qdeform.identities import VerificationConfig, errata_registry, lookup, verify_spec


# errata ids whose corrected counterpart has a different id
COUNTERPART = {
    "errata.phi21.definition": "phi21.qdiff",
    "errata.rn.hyper_rep.exton_4phi2": "rn.hyper_rep.exton",
    "errata.op.on_exp.vq": "op.on_exp.corollaries",
}


@dataclass
class ErrataConfig:
    order: int = 6
    scale: int = 2


def main() -> int:
    cfg = ErrataConfig()
    config = VerificationConfig(order=cfg.order, scale=cfg.scale)
    surprises = 0
    for spec in errata_registry():
        literal = verify_spec(spec, config)
        main_id = COUNTERPART.get(spec.id, spec.id[len("errata."):])
        corrected = verify_spec(lookup(main_id), config)
        print(f"{spec.id}  [{spec.label}]")
        if literal.first_mismatch:
            m = literal.first_mismatch
            print(f"    literal:   {literal.status} at {m['monomial']}: lhs={m['lhs']} rhs={m['rhs']}")
        else:
            print(f"    literal:   {literal.status} {literal.reason}")
        print(f"    corrected: {corrected.status}")
        surprises += literal.status != "mismatch" or corrected.status != "verified"
    print(f"\n{len(errata_registry())} literal forms, {surprises} unexpected outcomes")
    return 1 if surprises else 0


if __name__ == "__main__":
    sys.exit(main())
