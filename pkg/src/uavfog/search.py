"""Pieces shared by the population optimizers: trace rows and results."""

from dataclasses import dataclass

import numpy as np

TRACE_COLUMNS = ("iter", "best_h", "nc", "ncv1", "ncv2", "a_value", "n_encircle", "n_explore", "n_spiral")


@dataclass(frozen=True)
class TraceRow:
    iter: int
    best_h: float
    nc: int
    ncv1: int
    ncv2: int
    a_value: float = float("nan")  # WOA only
    n_encircle: int = 0
    n_explore: int = 0
    n_spiral: int = 0

    def values(self):
        return tuple(getattr(self, c) for c in TRACE_COLUMNS)


@dataclass(frozen=True)
class OptimizerResult:
    best: np.ndarray
    report: object  # FitnessReport of ``best``
    trace: tuple

    @property
    def best_fitness(self):
        return self.report.h_value

    @property
    def initial_fitness(self):
        return self.trace[0].best_h


def is_elitist(trace):
    h = [row.best_h for row in trace]
    return all(b >= a for a, b in zip(h, h[1:]))


def initial_agents(rng, pop_size, scenario, seed_agents=None):
    """Uniform agents over the area; ``seed_agents`` rows replace the first ones."""
    X = rng.random((pop_size, scenario.dim)) * scenario.upper
    if seed_agents is not None:
        S = np.atleast_2d(np.asarray(seed_agents, dtype=float))
        if S.shape[1] != scenario.dim:
            raise ValueError("seed agent has the wrong length")
        k = min(len(S), pop_size)
        X[:k] = np.clip(S[:k], 0.0, scenario.upper)
    return X
