"""Whale optimization over UAV placements, with a stagnation-aware coefficient schedule.

An agent is a full placement ``[x1, y1, ..., xn, yn]``. Each iteration every
agent either encircles the best placement, explores around a random agent, or
spirals toward the best, then is clamped to the area and re-scored.
"""

from dataclasses import dataclass, replace

import numpy as np

from . import rng as rngmod
from .objective import evaluate_population
from .search import OptimizerResult, TraceRow, initial_agents


@dataclass(frozen=True)
class WoaParams:
    pop_size: int = 30
    max_iters: int = 500
    spiral_b: float = 1.0
    seed: int = 0
    adaptive: bool = True
    stagnation_window: int = 25
    a_boost: float = 0.5

    def __post_init__(self):
        if self.pop_size < 2:
            raise ValueError("pop_size must be >= 2")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if self.spiral_b <= 0:
            raise ValueError("spiral_b must be > 0")
        if self.stagnation_window < 1:
            raise ValueError("stagnation_window must be >= 1")
        if self.a_boost < 0:
            raise ValueError("a_boost must be >= 0")


@dataclass(frozen=True)
class SearchState:
    agents: np.ndarray
    fitness: np.ndarray
    best: np.ndarray
    best_fitness: float
    best_report: object
    iter: int
    trace: tuple
    last_improved: int = 0
    alive: np.ndarray = None


def linear_a(t, max_iters):
    return max(0.0, 2.0 * (1.0 - t / max_iters))


def adaptive_schedule(state, params, t=None):
    """Coefficient ``a`` at iteration ``t`` (default: ``state.iter``).

    Follows the linear 2 -> 0 decay, except that once the best fitness has not
    moved for ``stagnation_window`` iterations ``a`` is lifted by ``a_boost``
    (capped at 2) to push agents back out.
    """
    t = state.iter if t is None else t
    a = linear_a(t, params.max_iters)
    if params.adaptive and state.iter - state.last_improved >= params.stagnation_window:
        a = min(2.0, a + params.a_boost)
    return a


def _row(t, report, a, counts=(0, 0, 0)):
    return TraceRow(t, report.h_value, report.nc, report.ncv1, report.ncv2, a, *counts)


def init_population(scenario, params, seed_agents=None, alive=None):
    g = rngmod.stream(params.seed, rngmod.WOA_INIT)
    X = initial_agents(g, params.pop_size, scenario, seed_agents)
    pf = evaluate_population(X, scenario, alive)
    k = int(np.argmax(pf.h))
    report = pf.report(k, scenario)
    return SearchState(
        agents=X,
        fitness=pf.h,
        best=X[k].copy(),
        best_fitness=float(pf.h[k]),
        best_report=report,
        iter=0,
        trace=(_row(0, report, linear_a(0, params.max_iters)),),
        alive=None if alive is None else np.asarray(alive, dtype=bool),
    )


def update_positions(X, best, a, r1, r2, p, ell, rand_idx, spiral_b):
    """Unclamped WOA move for every agent given the iteration's random draws.

    Returns the new positions and (encircling, exploring, spiral) agent counts;
    an agent counts as exploring if any coordinate took the random-agent branch.
    """
    A = 2.0 * a * r1 - a
    C = 2.0 * r2
    best = np.asarray(best)[None, :]
    near = np.abs(A) < 1.0
    ref = np.where(near, best, X[rand_idx])
    encircle = ref - A * np.abs(C * ref - X)
    spiral = np.abs(best - X) * (np.exp(spiral_b * ell) * np.cos(2.0 * np.pi * ell))[:, None] + best
    use_spiral = p >= 0.5
    new = np.where(use_spiral[:, None], spiral, encircle)
    shrink = ~use_spiral & near.all(axis=1)
    counts = (int(shrink.sum()), int((~use_spiral).sum() - shrink.sum()), int(use_spiral.sum()))
    return new, counts


def woa_step(state, scenario, params):
    """One synchronous WOA iteration.

    Random numbers come from a stream keyed by (seed, iteration); agent ``i``
    always reads row ``i`` of every block, so results do not depend on how the
    evaluation is scheduled. ``A`` and ``C`` are drawn per coordinate, and the
    ``|A| < 1`` test picks the reference (best vs random agent) per coordinate.
    """
    if state.iter >= params.max_iters:
        raise ValueError("search already used its iteration budget")
    X = state.agents
    P, d = X.shape
    t = state.iter + 1
    a = adaptive_schedule(state, params, t) if params.adaptive else linear_a(t, params.max_iters)

    g = rngmod.stream(params.seed, rngmod.WOA_STEP, state.iter)
    r1 = g.random((P, d))
    r2 = g.random((P, d))
    p = g.random(P)
    ell = g.uniform(-1.0, 1.0, P)
    rand_idx = g.integers(P, size=P)

    new, counts = update_positions(X, state.best, a, r1, r2, p, ell, rand_idx, params.spiral_b)
    new = np.clip(new, 0.0, scenario.upper)

    pf = evaluate_population(new, scenario, state.alive)
    k = int(np.argmax(pf.h))
    best_x, best_f, best_report, last = state.best, state.best_fitness, state.best_report, state.last_improved
    if pf.h[k] > best_f:
        best_x, best_f, best_report, last = new[k].copy(), float(pf.h[k]), pf.report(k, scenario), t

    return replace(
        state,
        agents=new,
        fitness=pf.h,
        best=best_x,
        best_fitness=best_f,
        best_report=best_report,
        iter=t,
        trace=state.trace + (_row(t, best_report, a, counts),),
        last_improved=last,
    )


def run_optimizer(scenario, params, seed_agents=None, alive=None):
    """Full WOA run; the trace has ``max_iters + 1`` rows including iteration 0."""
    state = init_population(scenario, params, seed_agents, alive)
    while state.iter < params.max_iters:
        state = woa_step(state, scenario, params)
    return OptimizerResult(best=state.best, report=state.best_report, trace=state.trace)
