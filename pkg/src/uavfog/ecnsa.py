"""Energy-conscious node swapping.

After placement is fixed, pair UAVs that have energy to spare but sit over
sparse users with UAVs that are running low while serving dense areas, and
exchange their positions. Coverage and links depend only on positions, so the
network looks the same afterwards; what changes is which battery carries the
heavy load.
"""

from dataclasses import dataclass, replace

import numpy as np

from .energy import motion_energy_frame, network_lifespan_sum
from .topology import build_topology


@dataclass(frozen=True)
class SwapThresholds:
    # Minimum energy gap between partners, as a fraction of one UAV's initial energy.
    min_energy_gap: float = 0.1


@dataclass(frozen=True)
class SwapPlan:
    swaps: tuple  # of (uav_a, uav_b): a has the energy, b has the users
    projected_travel: np.ndarray
    rationale: tuple  # of (users_a, users_b, energy_a, energy_b)

    def __len__(self):
        return len(self.swaps)


@dataclass(frozen=True)
class RepositionOutcome:
    placement: np.ndarray
    ledger: object
    applied: tuple
    dropped: tuple
    travel_j: np.ndarray  # energy the scheduled moves will cost
    nls: float = float("nan")


def _descending(values, candidates):
    # Stable sort on the negated key keeps ties in index order.
    cand = np.asarray(candidates, dtype=int)
    order = np.argsort(-np.asarray(values, dtype=float)[cand], kind="stable")
    return [int(i) for i in cand[order]]


def rank_nodes(topology, ledger):
    """Live UAVs by residual energy and by covered users, both descending."""
    alive = np.flatnonzero(ledger.alive)
    if len(alive) == 0:
        raise ValueError("no live UAVs to rank")
    return _descending(ledger.residual, alive), _descending(topology.cover_count, alive)


def select_swaps(rankings, topology, ledger, thresholds=SwapThresholds()):
    """Greedy pairing in ranking order.

    A UAV is dense when it covers more users than the median live UAV and
    sparse when it covers fewer. Walking UAVs from most to least energy, each
    sparse one takes the highest-ranked dense partner that is still free and
    trails it by at least the energy gap.
    """
    by_energy, by_coverage = rankings
    counts = np.asarray(topology.cover_count)
    energy = ledger.residual
    median = np.median(counts[by_energy])
    gap = thresholds.min_energy_gap * float(np.max(ledger.initial))

    dense = [j for j in by_coverage if counts[j] > median]
    taken = set()
    swaps, rationale = [], []
    travel = np.zeros(ledger.n)
    xy = topology.uav_xy
    for i in by_energy:
        if i in taken or counts[i] >= median:
            continue
        for j in dense:
            if j in taken or j == i or energy[i] - energy[j] < gap:
                continue
            swaps.append((i, j))
            rationale.append((int(counts[i]), int(counts[j]), float(energy[i]), float(energy[j])))
            taken.update((i, j))
            d = float(np.hypot(*(xy[i] - xy[j])))
            travel[i] = travel[j] = d
            break
    return SwapPlan(tuple(swaps), travel, tuple(rationale))


def apply_repositioning(placement, plan, ledger, params, scenario=None):
    """Exchange the positions of every feasible pair.

    The move is flown at the start of the next frame, so its cost is
    scheduled on ``ledger.pending_travel`` and debited by the next
    ``frame_energy_update``. A pair whose flight would not fit in one frame is
    dropped and listed in ``dropped``. With ``scenario`` given, the largest-
    component energy sum after the exchange is reported.
    """
    xy = np.asarray(placement, dtype=float).reshape(-1, 2).copy()
    pending = np.array(ledger.pending_travel if ledger.pending_travel is not None else np.zeros(ledger.n))
    travel_j = np.zeros(ledger.n)
    applied, dropped = [], []
    for a, b in plan.swaps:
        d = float(np.hypot(*(xy[a] - xy[b])))
        try:
            ta, _ = motion_energy_frame(pending[a] + d, params)
            tb, _ = motion_energy_frame(pending[b] + d, params)
        except ValueError:
            dropped.append((a, b))
            continue
        xy[[a, b]] = xy[[b, a]]
        pending[a] += d
        pending[b] += d
        travel_j[a], travel_j[b] = ta, tb
        applied.append((a, b))
    new_ledger = replace(ledger, pending_travel=pending)
    nls = float("nan")
    if scenario is not None:
        topo = build_topology(xy.ravel(), scenario, ledger.alive)
        nls = network_lifespan_sum(new_ledger, topo)
    return RepositionOutcome(xy.ravel(), new_ledger, tuple(applied), tuple(dropped), travel_j, nls)
