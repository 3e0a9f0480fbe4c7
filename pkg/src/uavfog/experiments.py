"""Multi-seed experiment drivers behind the `compare`, `sweep` and `simulate` commands."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
import statistics

from . import rng as rngmod
from .config import build_scenario, with_scenario
from .lifetime import run_simulation
from .pso import run_pso_baseline
from .topology import build_topology, connectivity_ratio
from .woa import run_optimizer

COMPARE_COLUMNS = ("seed", "woa_h0", "woa_h", "woa_nc", "pso_h0", "pso_h", "pso_nc")
SWEEP_COLUMNS = ("param", "value", "replicate", "seed", "h", "ncv1_ratio", "connectivity_ratio", "nc")
SWEEP_PARAMS = {"n_uavs": "n_uavs", "n_users": "n_users", "comm_radius": "comm_radius"}


def _map(fn, items, workers):
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            return list(ex.map(fn, items))
    return [fn(i) for i in items]


def paired_seeds(base, count):
    return [base + k for k in range(count)]


def _compare_one(args):
    cfg, seed, iters = args
    c = with_scenario(cfg, seed=seed)
    sc = build_scenario(c)
    w = run_optimizer(sc, c.woa_params(**({"max_iters": iters} if iters else {})))
    p = run_pso_baseline(sc, c.pso_params(**({"max_iters": iters} if iters else {})))
    return (seed, w.initial_fitness, w.best_fitness, w.report.nc, p.initial_fitness, p.best_fitness, p.report.nc)


def compare(cfg, n_seeds, iters=None, workers=1):
    """WOA and PSO on the same scenario for each of ``n_seeds`` consecutive seeds."""
    seeds = paired_seeds(cfg.scenario.seed, n_seeds)
    return _map(_compare_one, [(cfg, s, iters) for s in seeds], workers)


def compare_summary(rows):
    woa = [r[2] for r in rows]
    pso = [r[5] for r in rows]

    def sd(v):
        return statistics.stdev(v) if len(v) > 1 else 0.0

    return {
        "n_seeds": len(rows),
        "woa_mean_h": statistics.fmean(woa),
        "woa_std_h": sd(woa),
        "pso_mean_h": statistics.fmean(pso),
        "pso_std_h": sd(pso),
    }


def _sweep_one(args):
    cfg, param, value, rep, seed, iters = args
    c = with_scenario(cfg, seed=seed, **{SWEEP_PARAMS[param]: value})
    sc = build_scenario(c)
    res = run_optimizer(sc, c.woa_params(**({"max_iters": iters} if iters else {})))
    topo = build_topology(res.best, sc)
    m = sc.m
    return (
        param, value, rep, seed, res.best_fitness,
        res.report.ncv1 / m if m else 0.0, connectivity_ratio(topo), res.report.nc,
    )


def sweep_values(start, stop, step):
    if step <= 0:
        raise ValueError("step must be positive")
    out, k = [], 0
    while start + k * step <= stop + 1e-9 * abs(step):
        out.append(start + k * step)
        k += 1
    return out


def sweep(cfg, param, values, n_seeds, iters=None, workers=1):
    """Optimize at every value of ``param``.

    Replicate ``r`` uses the same seed at every point, so the user layout is
    shared along the sweep and only the swept parameter changes.
    """
    if param not in SWEEP_PARAMS:
        raise ValueError(f"cannot sweep {param!r}; choose one of {sorted(SWEEP_PARAMS)}")
    cast = int if param in ("n_uavs", "n_users") else float
    jobs = []
    for rep in range(n_seeds):
        seed = rngmod.derive_seed(cfg.scenario.seed, rngmod.SWEEP, rep)
        jobs += [(cfg, param, cast(v), rep, seed, iters) for v in values]
    return _map(_sweep_one, jobs, workers)


def sweep_means(rows):
    """Per swept value: (value, mean h, mean ncv1 ratio, mean connectivity)."""
    by = {}
    for r in rows:
        by.setdefault(r[1], []).append(r)
    out = []
    for v in sorted(by):
        rs = by[v]
        out.append((v, statistics.fmean(r[4] for r in rs), statistics.fmean(r[5] for r in rs),
                    statistics.fmean(r[6] for r in rs)))
    return out


def _lifespan_one(args):
    cfg, seed = args
    c = with_scenario(cfg, seed=seed)
    sc = build_scenario(c)
    wp = c.woa_params()
    placement = run_optimizer(sc, wp).best
    on = run_simulation(sc, replace(c.sim, ecnsa_enabled=True), wp, placement=placement)
    off = run_simulation(sc, replace(c.sim, ecnsa_enabled=False), wp, placement=placement)
    return seed, on, off


def lifespan_pairs(cfg, n_seeds, workers=1):
    """ECNSA on and off from the same optimized deployment, for each seed."""
    seeds = paired_seeds(cfg.scenario.seed, n_seeds)
    return _map(_lifespan_one, [(cfg, s) for s in seeds], workers)
