"""Coverage and connectivity sweeps over UAV count, user count and link radius.

    python scripts/sweeps.py --seeds 5 --out-dir results
    python scripts/sweeps.py --only comm_radius --iters 200
"""

import argparse
import os

from uavfog import experiments
from uavfog.config import Config
from uavfog.export import csv_text, write_text

RANGES = {
    "n_uavs": (10, 120, 10),
    "n_users": (30, 200, 10),
    "comm_radius": (90, 200, 10),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--iters", type=int)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--only", choices=sorted(RANGES))
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)

    for param, (lo, hi, step) in RANGES.items():
        if args.only and param != args.only:
            continue
        rows = experiments.sweep(Config(), param, experiments.sweep_values(lo, hi, step), args.seeds,
                                 args.iters, args.workers)
        means = experiments.sweep_means(rows)
        write_text(os.path.join(args.out_dir, f"sweep_{param}.csv"), csv_text(experiments.SWEEP_COLUMNS, rows))
        write_text(os.path.join(args.out_dir, f"sweep_{param}_means.csv"),
                   csv_text(("value", "mean_h", "mean_ncv1_ratio", "mean_connectivity_ratio"), means))
        print(param)
        for v, h, c1, conn in means:
            print(f"  {v:7.1f}  h {h:.3f}  ncv1/m {c1:.3f}  connectivity {conn:.3f}")


if __name__ == "__main__":
    main()
