"""WOA vs PSO final coverage over paired seeds (same scenario per pair).

    python scripts/compare.py --seeds 10 --out-dir results
"""

import argparse
import json
import os

from uavfog import experiments
from uavfog.config import Config, load
from uavfog.export import csv_text, write_json, write_text


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config")
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--iters", type=int)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args()

    cfg = load(args.config) if args.config else Config()
    rows = experiments.compare(cfg, args.seeds, args.iters, args.workers)
    os.makedirs(args.out_dir, exist_ok=True)
    write_text(os.path.join(args.out_dir, "comparison.csv"), csv_text(experiments.COMPARE_COLUMNS, rows))
    summary = experiments.compare_summary(rows)
    write_json(os.path.join(args.out_dir, "comparison_summary.json"), summary)
    for r in rows:
        print(f"seed {r[0]:3d}  woa {r[1]:.3f} -> {r[2]:.3f}   pso {r[4]:.3f} -> {r[5]:.3f}")
    print(json.dumps(summary, indent=2))


if __name__ == "__main__":
    main()
