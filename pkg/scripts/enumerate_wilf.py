"""Check Wilf and Froberg on every numerical semigroup up to a genus.

    python scripts/enumerate_wilf.py --max-genus 16 --workers 4
"""

import argparse
import json
import sys

from wilfglue import CampaignConfig, run_campaign


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-genus", type=int, default=14)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    report = run_campaign(CampaignConfig("enumerate-genus", max_genus=args.max_genus,
                                         workers=args.workers))
    print(f"{'genus':>5} {'count':>8}")
    for g, c in enumerate(report.per_genus_counts):
        print(f"{g:>5} {c:>8}")
    print(f"total {report.instances} in {report.wall_seconds:.2f}s")
    if report.violations:
        print(json.dumps(report.violations, indent=1))
        return 5
    print("no Wilf or Froberg violations")
    return 0


if __name__ == "__main__":
    sys.exit(main())
