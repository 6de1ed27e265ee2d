"""Run every property suite over several seeds and write one JSON report.

    python scripts/run_property_corpus.py --count 100 --seeds 0 1 2 -o corpus.json
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from signed_arboricity.suites import SUITES, run_suite


@dataclass
class CorpusConfig:
    count: int = 50
    seeds: list[int] = field(default_factory=lambda: [0])
    suites: list[str] = field(default_factory=lambda: sorted(SUITES))
    output: str | None = None


def run(cfg: CorpusConfig) -> dict:
    rows = []
    for suite in cfg.suites:
        for seed in cfg.seeds:
            start = time.perf_counter()
            cases = run_suite(suite, cfg.count, seed)
            failed = [c for c in cases if not c.passed]
            rows.append({
                "suite": suite,
                "seed": seed,
                "passed": len(cases) - len(failed),
                "failed": len(failed),
                "seconds": round(time.perf_counter() - start, 3),
                "failures": [{"index": c.index, "seed": c.seed, "detail": c.detail} for c in failed],
            })
    return {"config": asdict(cfg), "runs": rows}


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seeds", type=int, nargs="+", default=[0])
    p.add_argument("--suites", nargs="+", choices=sorted(SUITES), default=sorted(SUITES))
    p.add_argument("--output", "-o")
    args = p.parse_args()
    report = run(CorpusConfig(args.count, args.seeds, args.suites, args.output))
    for row in report["runs"]:
        status = "ok  " if not row["failed"] else "FAIL"
        print(f"{status} {row['suite']:<14} seed {row['seed']:<4} {row['passed']}/{row['passed'] + row['failed']} in {row['seconds']}s")
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(report, fh, indent=2)
    return 0 if all(not row["failed"] for row in report["runs"]) else 1


if __name__ == "__main__":
    sys.exit(main())
