"""Fog-fog link graph, its components, and per-user coverage for one placement."""

from collections import deque
from dataclasses import dataclass

import numpy as np

from .model import as_placement


@dataclass(frozen=True)
class Topology:
    """Snapshot of the network for one placement and one set of users.

    ``components`` partitions the live UAVs, each component sorted and the
    list ordered by smallest member. ``serving_uav`` names, for every user, the
    nearest live UAV that covers it (-1 if none); it is what the energy model
    charges for traffic.
    """

    n: int
    adjacency: tuple
    components: tuple
    largest_component: frozenset
    user_cover_any: np.ndarray
    user_cover_largest: np.ndarray
    serving_uav: np.ndarray
    cover_count: np.ndarray
    uav_xy: np.ndarray
    user_xy: np.ndarray
    altitude: float
    alive: np.ndarray


def pairwise_sq(a, b):
    d = a[:, None, :] - b[None, :, :]
    return np.einsum("ijk,ijk->ij", d, d)


def coverage_matrix(uav_xy, user_xy, user_active, scenario, alive=None):
    """Boolean (n, m) matrix: UAV i covers user j."""
    r2 = scenario.coverage_radius_sq_ground()
    if r2 < 0 or len(user_xy) == 0:
        return np.zeros((len(uav_xy), len(user_xy)), dtype=bool), np.full((len(uav_xy), len(user_xy)), np.inf)
    d2 = pairwise_sq(uav_xy, user_xy)
    cov = (d2 <= r2) & user_active[None, :]
    if alive is not None:
        cov &= alive[:, None]
    return cov, d2


def _components(adjacency, alive):
    seen = np.zeros(len(adjacency), dtype=bool)
    comps = []
    for start in range(len(adjacency)):
        if seen[start] or not alive[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def pick_largest(components):
    """Largest component; ties go to the one holding the smallest UAV index."""
    if not components:
        return frozenset()
    best = max(components, key=lambda c: (len(c), -min(c)))
    return frozenset(best)


def build_topology(placement, scenario, alive=None):
    """Link graph, components and coverage maps for ``placement``.

    Dead UAVs (``alive[i]`` false) neither link nor cover and belong to no
    component.
    """
    x = as_placement(placement, scenario)
    n = scenario.n_uavs
    alive = np.ones(n, dtype=bool) if alive is None else np.asarray(alive, dtype=bool)
    if alive.shape != (n,):
        raise ValueError(f"alive mask must have shape ({n},)")
    uav_xy = x.reshape(n, 2)

    d2 = pairwise_sq(uav_xy, uav_xy)
    linked = (d2 <= scenario.comm_radius ** 2) & alive[:, None] & alive[None, :]
    np.fill_diagonal(linked, False)
    adjacency = tuple(tuple(int(j) for j in np.flatnonzero(row)) for row in linked)

    components = _components(adjacency, alive)
    largest = pick_largest(components)

    cov, ud2 = coverage_matrix(uav_xy, scenario.user_xy, scenario.user_active, scenario, alive)
    in_largest = np.zeros(n, dtype=bool)
    in_largest[list(largest)] = True
    any_cov = cov.any(axis=0)
    largest_cov = cov[in_largest].any(axis=0) if largest else np.zeros(scenario.m, dtype=bool)

    serving = np.full(scenario.m, -1, dtype=int)
    if scenario.m and n:
        masked = np.where(cov, ud2, np.inf)
        nearest = np.argmin(masked, axis=0)
        serving = np.where(any_cov, nearest, -1)

    return Topology(
        n=n,
        adjacency=adjacency,
        components=components,
        largest_component=largest,
        user_cover_any=any_cov,
        user_cover_largest=largest_cov,
        serving_uav=serving,
        cover_count=cov.sum(axis=1),
        uav_xy=uav_xy.copy(),
        user_xy=scenario.user_xy,
        altitude=scenario.altitude,
        alive=alive.copy(),
    )


def nc_largest(topology):
    return len(topology.largest_component)


def connectivity_ratio(topology):
    """Share of the whole fleet (dead UAVs included) that sits in the largest component."""
    if topology.n < 1:
        raise ValueError("topology has no UAVs")
    return len(topology.largest_component) / topology.n
