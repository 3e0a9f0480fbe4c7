"""Coverage counts and the connected-coverage fitness H.

``fitness_h`` goes through :func:`build_topology` and is the reference path.
``evaluate_population`` computes the same numbers for a whole population at
once and is what the optimizers call in their inner loop.
"""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .topology import build_topology, coverage_matrix


@dataclass(frozen=True)
class FitnessReport:
    nc: int
    ncv1: int
    ncv2: int
    h_value: float
    m_active: int
    m: int

    def as_row(self):
        return {"nc": self.nc, "ncv1": self.ncv1, "ncv2": self.ncv2, "h": self.h_value, "m_active": self.m_active}


def coverage_global(topology):
    return int(np.count_nonzero(topology.user_cover_any))


def coverage_connected(topology):
    return int(np.count_nonzero(topology.user_cover_largest))


def h_from_counts(ncv2, m):
    # H divides by the total user count, active or not; no users means H = 0.
    return ncv2 / m if m else 0.0


def report_from_topology(topology, scenario):
    ncv2 = coverage_connected(topology)
    return FitnessReport(
        nc=len(topology.largest_component),
        ncv1=coverage_global(topology),
        ncv2=ncv2,
        h_value=h_from_counts(ncv2, scenario.m),
        m_active=int(np.count_nonzero(scenario.user_active)),
        m=scenario.m,
    )


def fitness_h(placement, scenario, alive=None):
    return report_from_topology(build_topology(placement, scenario, alive), scenario)


@dataclass(frozen=True)
class PopulationFitness:
    h: np.ndarray
    nc: np.ndarray
    ncv1: np.ndarray
    ncv2: np.ndarray

    def report(self, k, scenario):
        return FitnessReport(
            nc=int(self.nc[k]),
            ncv1=int(self.ncv1[k]),
            ncv2=int(self.ncv2[k]),
            h_value=float(self.h[k]),
            m_active=int(np.count_nonzero(scenario.user_active)),
            m=scenario.m,
        )


def _sq_dists(ax, ay, bx, by):
    dx = ax[:, :, None] - bx[..., None, :]
    dy = ay[:, :, None] - by[..., None, :]
    dx *= dx
    dy *= dy
    dx += dy
    return dx


def evaluate_population(X, scenario, alive=None):
    """Fitness of every row of ``X`` (shape ``(P, 2n)``).

    All P link graphs are stacked into one block-diagonal sparse graph so a
    single connected-components pass labels every agent's components. Dead
    UAVs are dropped before any distance is computed.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    P = X.shape[0]
    if X.shape[1] != scenario.dim:
        raise ValueError(f"placements must have {scenario.dim} columns, got {X.shape[1]}")
    xy = X.reshape(P, scenario.n_uavs, 2)
    if alive is not None:
        xy = xy[:, np.asarray(alive, dtype=bool), :]
    n = xy.shape[1]
    m = scenario.m
    if n == 0:
        zeros = np.zeros(P, dtype=int)
        return PopulationFitness(h=np.zeros(P), nc=zeros, ncv1=zeros.copy(), ncv2=zeros.copy())
    xs = np.ascontiguousarray(xy[:, :, 0])
    ys = np.ascontiguousarray(xy[:, :, 1])

    linked = _sq_dists(xs, ys, xs, ys) <= scenario.comm_radius ** 2
    p_idx, i_idx, j_idx = np.nonzero(linked)
    offset = p_idx * n
    graph = coo_matrix(
        (np.ones(len(p_idx), dtype=np.int8), (offset + i_idx, offset + j_idx)), shape=(P * n, P * n)
    )
    _, flat = connected_components(graph, directed=False)
    # Labels are unique across agents and the first flat index of a label is
    # that component's smallest member.
    _, first, inverse, counts = np.unique(flat, return_index=True, return_inverse=True, return_counts=True)
    labels = flat.reshape(P, n)
    sizes = counts[inverse].reshape(P, n)
    roots = (first[inverse] % n).reshape(P, n)
    # Largest component, ties to the smallest member index.
    star = np.argmax(sizes * (n + 1) + (n - roots), axis=1)
    rows = np.arange(P)
    nc = sizes[rows, star]
    in_star = labels == labels[rows, star][:, None]

    r2 = scenario.coverage_radius_sq_ground()
    users = scenario.user_xy[scenario.user_active]
    if m == 0 or r2 < 0 or len(users) == 0:
        zeros = np.zeros(P, dtype=int)
        return PopulationFitness(h=np.zeros(P), nc=nc, ncv1=zeros, ncv2=zeros.copy())
    cov = _sq_dists(xs, ys, users[:, 0][None, :], users[:, 1][None, :]) <= r2
    ncv1 = cov.any(axis=1).sum(axis=1)
    cov &= in_star[:, :, None]
    ncv2 = cov.any(axis=1).sum(axis=1)
    return PopulationFitness(h=ncv2 / m, nc=nc, ncv1=ncv1, ncv2=ncv2)
