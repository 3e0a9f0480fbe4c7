"""Global-best particle swarm baseline over the same placement space."""

from dataclasses import dataclass

import numpy as np

from . import rng as rngmod
from .objective import evaluate_population
from .search import OptimizerResult, TraceRow, initial_agents


@dataclass(frozen=True)
class PsoParams:
    """Defaults are the Clerc-Kennedy constriction values."""

    pop_size: int = 30
    max_iters: int = 500
    inertia: float = 0.7298
    cognitive: float = 1.49618
    social: float = 1.49618
    vmax_frac: float = 0.2  # velocity cap as a fraction of the area side
    seed: int = 0

    def __post_init__(self):
        if self.pop_size < 2:
            raise ValueError("pop_size must be >= 2")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if not 0 < self.vmax_frac <= 1:
            raise ValueError("vmax_frac must be in (0, 1]")


def run_pso_baseline(scenario, params, seed_agents=None, alive=None):
    ub = scenario.upper
    vmax = params.vmax_frac * ub
    g = rngmod.stream(params.seed, rngmod.PSO_INIT)
    X = initial_agents(g, params.pop_size, scenario, seed_agents)
    V = (2.0 * g.random(X.shape) - 1.0) * vmax

    pf = evaluate_population(X, scenario, alive)
    pbest, pbest_f = X.copy(), pf.h.copy()
    k = int(np.argmax(pf.h))
    gbest, gbest_f, report = X[k].copy(), float(pf.h[k]), pf.report(k, scenario)
    trace = [TraceRow(0, report.h_value, report.nc, report.ncv1, report.ncv2)]

    for t in range(params.max_iters):
        g = rngmod.stream(params.seed, rngmod.PSO_STEP, t)
        r1 = g.random(X.shape)
        r2 = g.random(X.shape)
        V = params.inertia * V + params.cognitive * r1 * (pbest - X) + params.social * r2 * (gbest - X)
        V = np.clip(V, -vmax, vmax)
        X = np.clip(X + V, 0.0, ub)
        pf = evaluate_population(X, scenario, alive)
        improved = pf.h > pbest_f
        pbest[improved] = X[improved]
        pbest_f[improved] = pf.h[improved]
        k = int(np.argmax(pf.h))
        if pf.h[k] > gbest_f:
            gbest, gbest_f, report = X[k].copy(), float(pf.h[k]), pf.report(k, scenario)
        trace.append(TraceRow(t + 1, report.h_value, report.nc, report.ncv1, report.ncv2))
    return OptimizerResult(best=gbest, report=report, trace=tuple(trace))
