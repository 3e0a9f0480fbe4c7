"""Mean best-h per iteration for adaptive WOA, plain WOA and PSO on the default scenario.

    python scripts/convergence.py --seeds 10 --out results/convergence.csv
"""

import argparse
import os

import numpy as np

from uavfog.config import Config, build_scenario, with_scenario
from uavfog.export import csv_text, write_text
from uavfog.pso import run_pso_baseline
from uavfog.woa import run_optimizer


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--iters", type=int, default=500)
    ap.add_argument("--out", default="results/convergence.csv")
    args = ap.parse_args()

    curves = {"woa_adaptive": [], "woa_linear": [], "pso": []}
    for seed in range(args.seeds):
        cfg = with_scenario(Config(), seed=seed)
        sc = build_scenario(cfg)
        runs = {
            "woa_adaptive": run_optimizer(sc, cfg.woa_params(max_iters=args.iters)),
            "woa_linear": run_optimizer(sc, cfg.woa_params(max_iters=args.iters, adaptive=False)),
            "pso": run_pso_baseline(sc, cfg.pso_params(max_iters=args.iters)),
        }
        for name, res in runs.items():
            curves[name].append([r.best_h for r in res.trace])
        print(f"seed {seed}: " + "  ".join(f"{k}={v.best_fitness:.3f}" for k, v in runs.items()))

    means = {k: np.mean(v, axis=0) for k, v in curves.items()}
    rows = [(t, *(means[k][t] for k in curves)) for t in range(args.iters + 1)]
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    write_text(args.out, csv_text(("iter", *curves), rows))
    mid = min(100, args.iters)
    for k, m in means.items():
        print(f"{k:13s} start {m[0]:.3f}  iter {mid} {m[mid]:.3f}  final {m[-1]:.3f}")


if __name__ == "__main__":
    main()
