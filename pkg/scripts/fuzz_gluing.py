"""Audit seeded random gluings of numerical semigroups and tally every flag.

    python scripts/fuzz_gluing.py --seed 1 --count 5000 --workers 4
"""

import argparse
import sys

from wilfglue import CampaignConfig, run_campaign
from wilfglue.harness import CampaignAborted


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--gen-bound", type=int, default=60)
    ap.add_argument("--kmax", type=int, default=30)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    cfg = CampaignConfig("fuzz-gluing", seed=args.seed, count=args.count,
                         gen_bound=args.gen_bound, kmax=args.kmax, workers=args.workers)
    try:
        report = run_campaign(cfg)
    except CampaignAborted as exc:
        print(f"aborted: {exc}; rerun with: wilfglue {' '.join(exc.bundle['argv'])}")
        return 1
    width = max(len(k) for k in report.audit_aggregate)
    for key, count in report.audit_aggregate.items():
        print(f"{key:<{width}} {count:>7}")
    rate = report.instances / report.wall_seconds if report.wall_seconds else float("inf")
    print(f"{report.instances} gluings, {len(report.violations)} failing audits, {rate:.0f}/s")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
