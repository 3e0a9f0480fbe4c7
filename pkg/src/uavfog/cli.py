"""Command-line entry point: generate, optimize, simulate, compare, sweep.

Every command reads an optional JSON config (``--config``); flags override it.
On any validation failure the process exits with status 2 and prints a JSON
object ``{"error": ..., "message": ...}`` on stderr.
"""

from dataclasses import replace
import argparse
import json
import logging
import os
import sys
import time

from . import config as cfgmod
from . import experiments
from .export import csv_text, frames_csv, placement_doc, summary_doc, trace_csv, write_json, write_text
from .lifetime import run_simulation
from .pso import run_pso_baseline
from .woa import run_optimizer

log = logging.getLogger("uavfog")


def _load(args):
    cfg = cfgmod.load(args.config) if args.config else cfgmod.Config()
    if getattr(args, "seed", None) is not None:
        cfg = cfgmod.with_scenario(cfg, seed=args.seed)
    return cfg


def _out(args, name):
    os.makedirs(args.out_dir, exist_ok=True)
    return os.path.join(args.out_dir, name)


def _iters(args):
    return {"max_iters": args.iters} if args.iters else {}


def cmd_generate(args):
    cfg = _load(args)
    scenario, cfg = cfgmod.generate_scenario(cfg)
    text = cfgmod.dumps(cfg)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        write_text(args.out, text)
        log.info("wrote %s (%d users)", args.out, scenario.m)


def cmd_optimize(args):
    cfg = _load(args)
    scenario = cfgmod.build_scenario(cfg)
    t0 = time.perf_counter()
    if args.algo == "woa":
        res = run_optimizer(scenario, cfg.woa_params(**_iters(args)))
    else:
        res = run_pso_baseline(scenario, cfg.pso_params(**_iters(args)))
    log.info("%s: h %.4f -> %.4f in %.1fs", args.algo, res.initial_fitness, res.best_fitness, time.perf_counter() - t0)
    write_json(_out(args, "placement.json"), placement_doc(res, scenario, args.algo))
    write_text(_out(args, "trace.csv"), trace_csv(res.trace))


def cmd_simulate(args):
    cfg = _load(args)
    sim = cfg.sim
    overrides = {}
    if args.frames:
        overrides["n_frames"] = args.frames
    if args.no_ecnsa:
        overrides["ecnsa_enabled"] = False
    if overrides:
        sim = replace(sim, **overrides)
    scenario = cfgmod.build_scenario(cfg)
    res = run_simulation(scenario, sim, cfg.woa_params(**_iters(args)))
    write_text(_out(args, "frames.csv"), frames_csv(res))
    write_json(_out(args, "summary.json"), summary_doc(res, sim.ecnsa_enabled))
    log.info("lifespan %d frames, h_initial %.4f", res.lifespan_frames, res.h_initial)


def cmd_compare(args):
    cfg = _load(args)
    rows = experiments.compare(cfg, args.seeds, args.iters, args.workers)
    write_text(_out(args, "comparison.csv"), csv_text(experiments.COMPARE_COLUMNS, rows))
    summary = experiments.compare_summary(rows)
    write_json(_out(args, "comparison_summary.json"), summary)
    print(json.dumps(summary, indent=2, sort_keys=True))


def cmd_sweep(args):
    cfg = _load(args)
    values = experiments.sweep_values(args.start, args.stop, args.step)
    rows = experiments.sweep(cfg, args.param, values, args.seeds, args.iters, args.workers)
    write_text(_out(args, f"sweep_{args.param}.csv"), csv_text(experiments.SWEEP_COLUMNS, rows))
    means = experiments.sweep_means(rows)
    write_text(
        _out(args, f"sweep_{args.param}_means.csv"),
        csv_text(("value", "mean_h", "mean_ncv1_ratio", "mean_connectivity_ratio"), means),
    )


def build_parser():
    p = argparse.ArgumentParser(prog="uavfog", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, out_dir=True):
        sp.add_argument("--config", help="JSON config document")
        sp.add_argument("--seed", type=int, help="master seed (overrides scenario.seed)")
        if out_dir:
            sp.add_argument("--out-dir", default=".", help="directory for output files")

    g = sub.add_parser("generate", help="write a normalized scenario document with user positions")
    common(g, out_dir=False)
    g.add_argument("--out", default="-", help="output path, '-' for stdout")
    g.set_defaults(func=cmd_generate)

    o = sub.add_parser("optimize", help="optimize one placement; writes placement.json and trace.csv")
    common(o)
    o.add_argument("--algo", choices=("woa", "pso"), default="woa")
    o.add_argument("--iters", type=int)
    o.set_defaults(func=cmd_optimize)

    s = sub.add_parser("simulate", help="run the timeframe simulation; writes frames.csv and summary.json")
    common(s)
    s.add_argument("--frames", type=int)
    s.add_argument("--iters", type=int, help="WOA iterations for the initial deployment")
    s.add_argument("--no-ecnsa", action="store_true")
    s.set_defaults(func=cmd_simulate)

    c = sub.add_parser("compare", help="WOA vs PSO over paired seeds; writes comparison.csv")
    common(c)
    c.add_argument("--seeds", type=int, default=10)
    c.add_argument("--iters", type=int)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_compare)

    w = sub.add_parser("sweep", help="vary one parameter; writes per-point coverage/connectivity CSVs")
    common(w)
    w.add_argument("--param", required=True, choices=sorted(experiments.SWEEP_PARAMS))
    w.add_argument("--from", dest="start", type=float, required=True)
    w.add_argument("--to", dest="stop", type=float, required=True)
    w.add_argument("--step", type=float, required=True)
    w.add_argument("--seeds", type=int, default=5)
    w.add_argument("--iters", type=int)
    w.add_argument("--workers", type=int, default=1)
    w.set_defaults(func=cmd_sweep)
    return p


def _fail(kind, message):
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return 2


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            raise
        return _fail("usage", "invalid command line; see --help")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        args.func(args)
    except cfgmod.ConfigError as exc:
        return _fail("config", str(exc))
    except (ValueError, OSError) as exc:
        return _fail(type(exc).__name__, str(exc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
