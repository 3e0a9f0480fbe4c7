"""Time-to-threshold lifespan with and without node swapping, on paired seeds.

Two energy profiles:

* ``default``: the package defaults. Hover power dwarfs radio energy, so every
  UAV drains at nearly the same rate and swapping has nothing to rebalance.
* ``traffic``: low hover power and heavy downlink traffic, so per-UAV load
  decides who dies first. This is where swapping can pay off.

    python scripts/lifespan.py --profile default --seeds 10
    python scripts/lifespan.py --profile traffic --seeds 8 --frames 24
"""

import argparse
import os
import statistics
from dataclasses import replace

from uavfog.config import Config, build_scenario, with_scenario
from uavfog.energy import EnergyParams
from uavfog.export import csv_text, frames_csv, write_text
from uavfog.lifetime import run_simulation
from uavfog.woa import run_optimizer

PROFILES = {
    "default": dict(energy=EnergyParams(), initial_energy=1.08e6, swap_gap=0.1),
    "traffic": dict(energy=EnergyParams(p_hover=5.0, p_travel=30.0, p_receive_uav=5.0, output_data_bits=2e9),
                    initial_energy=1e5, swap_gap=0.05),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--profile", choices=sorted(PROFILES), default="default")
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--first-seed", type=int, default=0)
    ap.add_argument("--frames", type=int, default=12)
    ap.add_argument("--iters", type=int, default=500, help="WOA iterations for the initial deployment")
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args()
    prof = PROFILES[args.profile]
    os.makedirs(args.out_dir, exist_ok=True)

    rows = []
    for seed in range(args.first_seed, args.first_seed + args.seeds):
        cfg = with_scenario(Config(), seed=seed, initial_energy=prof["initial_energy"])
        sim = replace(cfg.sim, n_frames=args.frames, swap_min_energy_gap=prof["swap_gap"])
        cfg = replace(cfg, energy=prof["energy"], sim=sim)
        sc = build_scenario(cfg)
        wp = cfg.woa_params(max_iters=args.iters)
        placement = run_optimizer(sc, wp).best
        on = run_simulation(sc, sim, wp, placement=placement)
        off = run_simulation(sc, replace(sim, ecnsa_enabled=False), wp, placement=placement)
        swaps = sum(f.swaps for f in on.frames)
        rows.append((seed, on.h_initial, on.lifespan_frames, off.lifespan_frames, swaps))
        write_text(os.path.join(args.out_dir, f"frames_{args.profile}_s{seed}_ecnsa.csv"), frames_csv(on))
        write_text(os.path.join(args.out_dir, f"frames_{args.profile}_s{seed}_plain.csv"), frames_csv(off))
        print(f"seed {seed:3d}  h0 {on.h_initial:.3f}  lifespan ecnsa {on.lifespan_frames:2d}  "
              f"plain {off.lifespan_frames:2d}  swaps {swaps}")

    write_text(os.path.join(args.out_dir, f"lifespan_{args.profile}.csv"),
               csv_text(("seed", "h_initial", "lifespan_ecnsa", "lifespan_plain", "swaps"), rows))
    on_m = statistics.fmean(r[2] for r in rows)
    off_m = statistics.fmean(r[3] for r in rows)
    print(f"mean lifespan: ecnsa {on_m:.2f}  plain {off_m:.2f}  ratio {on_m / off_m:.3f}")


if __name__ == "__main__":
    main()
