"""Audit one ray gluing over a range of degree bounds, in every gap mode.

Shows how each claim's status and the shell gap counts move as the bound
grows.

    python scripts/ray_gluing_audit.py data/ray.json --bounds 10 40 5
"""

import argparse
import json
import sys
from pathlib import Path

from wilfglue import audit_affine_gluing
from wilfglue.affine_gluing import order_from, read_ray_spec

MODES = ("paper-literal", "lattice")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("spec")
    ap.add_argument("--bounds", type=int, nargs=3, default=[10, 30, 5],
                    metavar=("LO", "HI", "STEP"))
    args = ap.parse_args()

    data = json.loads(Path(args.spec).read_text(encoding="utf-8"))
    spec = read_ray_spec(data)
    order = order_from(data, spec.A.dim)
    lo, hi, step = args.bounds
    for mode in MODES:
        print(f"== {mode}")
        for bound in range(lo, hi + 1, step):
            a = audit_affine_gluing(spec, order, bound, mode)
            c = a.claims
            tail = a.analysis_C.shell_gap_counts[-5:]
            print(f"bound {bound:>3}  gaps(C) {len(a.analysis_C.gaps):>4}  "
                  f"subset {c['gaps_subset_ok']:<22} trend {a.details['c_semigroup_trend']:<10} "
                  f"last shells {list(tail)}")
        print("witnesses outside gaps(A):", a.details["gaps_subset_witnesses"][:8])
    return 0


if __name__ == "__main__":
    sys.exit(main())
