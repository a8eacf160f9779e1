"""Verify the whole registry and write a JSON report plus a timing table.

    python scripts/verify_all.py --order 6 --jobs 4 --out reports/verify_all.json
"""

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from qdeform.identities import VerificationConfig, summarize, verify_all


@dataclass
class RunConfig:
    order: Optional[int] = None
    scale: int = 2
    jobs: int = 1
    prefix: Optional[str] = None
    out: Optional[str] = None
    slowest: int = 10


def parse(argv=None) -> RunConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(RunConfig()).items():
        kind = type(default) if default is not None else (int if name == "order" else str)
        p.add_argument(f"--{name}", type=kind, default=default)
    return RunConfig(**vars(p.parse_args(argv)))


def main(argv=None) -> int:
    cfg = parse(argv)
    reports = verify_all(VerificationConfig(order=cfg.order, scale=cfg.scale), prefix=cfg.prefix, jobs=cfg.jobs)
    for r in reports:
        print(r.text())
    counts = summarize(reports)
    print(" ".join(f"{k}={v}" for k, v in counts.items()))

    print(f"\nslowest {cfg.slowest}:")
    for r in sorted(reports, key=lambda r: -r.elapsed_ms)[: cfg.slowest]:
        print(f"  {r.elapsed_ms:9.1f} ms  {r.id}")

    if cfg.out:
        path = Path(cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"config": asdict(cfg), "summary": counts,
                                    "reports": [r.to_json() for r in reports]}, indent=2, sort_keys=True))
        print(f"wrote {path}")
    return 0 if counts["mismatch"] == counts["error"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
