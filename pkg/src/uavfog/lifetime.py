"""Discrete-timeframe simulation of a deployed fleet.

Frame 0 is the freshly optimized deployment before any energy is spent.
Each later frame applies user churn, flies any moves scheduled at the end of
the previous frame, charges one frame of energy, records the end-of-frame
network, and then (optionally) plans swaps and re-optimizes for the next one.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from . import rng as rngmod
from .ecnsa import SwapThresholds, apply_repositioning, rank_nodes, select_swaps
from .energy import EnergyLedger, frame_energy_update, network_lifespan_sum
from .model import UserNode
from .objective import report_from_topology
from .topology import build_topology, connectivity_ratio
from .woa import WoaParams, run_optimizer

FRAME_COLUMNS = (
    "frame", "h", "connectivity_ratio", "alive", "total_residual_j", "nls_gstar_j", "deaths", "swaps",
    "reopt", "hover_j", "travel_j", "comm_j",
)


@dataclass(frozen=True)
class SimConfig:
    n_frames: int = 12
    user_toggle_prob: float = 0.02
    user_jitter_sigma: float = 5.0  # m
    ecnsa_enabled: bool = True
    reopt_trigger: float = 0.0  # 0 disables re-optimization
    reopt_iters: int = 100
    coverage_floor: float = 0.8
    swap_min_energy_gap: float = 0.1

    def __post_init__(self):
        if self.n_frames < 1:
            raise ValueError("n_frames must be >= 1")
        for name in ("user_toggle_prob", "reopt_trigger", "coverage_floor", "swap_min_energy_gap"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        if self.user_jitter_sigma < 0:
            raise ValueError("user_jitter_sigma must be >= 0")
        if self.reopt_iters < 1:
            raise ValueError("reopt_iters must be >= 1")


@dataclass(frozen=True)
class FrameRecord:
    frame: int
    h: float
    connectivity_ratio: float
    alive: int
    total_residual_j: float
    nls_gstar_j: float
    deaths: int
    swaps: int
    reopt: bool
    hover_j: float
    travel_j: float
    comm_j: float

    def values(self):
        return tuple(getattr(self, c) for c in FRAME_COLUMNS)


@dataclass(frozen=True)
class SimResult:
    frames: tuple
    h_initial: float
    lifespan_frames: int
    coverage_floor: float
    events: tuple
    initial_energy_j: float
    placement_initial: np.ndarray
    placement_final: np.ndarray

    @property
    def final_residual_j(self):
        return self.frames[-1].total_residual_j

    @property
    def consumed_j(self):
        return sum(f.hover_j + f.travel_j + f.comm_j for f in self.frames)


@dataclass(frozen=True)
class SimState:
    frame: int
    scenario: object
    placement: np.ndarray
    ledger: EnergyLedger
    h_initial: float
    records: tuple = ()
    events: tuple = ()


def churn_users(scenario, frame, sim):
    """Toggle users on/off and jitter their positions for one frame."""
    if scenario.m == 0:
        return scenario
    g = rngmod.stream(scenario.seed, rngmod.CHURN, frame)
    flip = g.random(scenario.m) < sim.user_toggle_prob
    jitter = g.normal(0.0, 1.0, (scenario.m, 2)) * sim.user_jitter_sigma
    xy = scenario.user_xy + jitter
    xy[:, 0] = np.clip(xy[:, 0], 0.0, scenario.area_width)
    xy[:, 1] = np.clip(xy[:, 1], 0.0, scenario.area_height)
    users = [
        UserNode(u.id, (float(x), float(y)), bool(u.active ^ f))
        for u, (x, y), f in zip(scenario.users, xy, flip)
    ]
    return scenario.with_users(users)


def _record(frame, scenario, placement, ledger, deaths, swaps, reopt, breakdown):
    topo = build_topology(placement, scenario, ledger.alive)
    rep = report_from_topology(topo, scenario)
    return FrameRecord(
        frame=frame,
        h=rep.h_value,
        connectivity_ratio=connectivity_ratio(topo),
        alive=int(np.count_nonzero(ledger.alive)),
        total_residual_j=float(np.sum(ledger.residual)),
        nls_gstar_j=network_lifespan_sum(ledger, topo),
        deaths=deaths,
        swaps=swaps,
        reopt=reopt,
        hover_j=breakdown[0],
        travel_j=breakdown[1],
        comm_j=breakdown[2],
    ), topo


def step_timeframe(state, sim, woa_params):
    frame = state.frame + 1
    scenario = churn_users(state.scenario, frame, sim)
    params = scenario.energy
    ledger = state.ledger
    was_alive = ledger.alive

    start = build_topology(state.placement, scenario, was_alive)
    ledger = frame_energy_update(ledger, ledger.pending_travel, start, params)
    died = np.flatnonzero(was_alive & ~ledger.alive)
    events = list(state.events)
    events += [{"frame": frame, "kind": "death", "uav": int(i)} for i in died]
    breakdown = (float(ledger.hover_j.sum()), float(ledger.travel_j.sum()), float(ledger.comm_j.sum()))

    placement = state.placement
    rec, topo = _record(frame, scenario, placement, ledger, len(died), 0, False, breakdown)

    n_swaps = 0
    if sim.ecnsa_enabled and np.any(ledger.alive):
        plan = select_swaps(rank_nodes(topo, ledger), topo, ledger, SwapThresholds(sim.swap_min_energy_gap))
        if len(plan):
            out = apply_repositioning(placement, plan, ledger, params)
            placement, ledger = out.placement, out.ledger
            n_swaps = len(out.applied)
            for (a, b), why in zip(plan.swaps, plan.rationale):
                events.append({
                    "frame": frame,
                    "kind": "swap" if (a, b) in out.applied else "swap_dropped",
                    "pair": [a, b],
                    "users": [why[0], why[1]],
                    "energy_j": [why[2], why[3]],
                    "travel_m": float(plan.projected_travel[a]),
                    "travel_j": [float(out.travel_j[a]), float(out.travel_j[b])],
                })

    reopt = False
    if sim.reopt_trigger > 0 and rec.h < sim.reopt_trigger * state.h_initial and np.any(ledger.alive):
        wp = replace(woa_params, max_iters=sim.reopt_iters, seed=rngmod.derive_seed(woa_params.seed, rngmod.REOPT, frame))
        res = run_optimizer(scenario, wp, seed_agents=placement, alive=ledger.alive)
        target = np.where(np.repeat(ledger.alive, 2), res.best, placement)
        moved = np.hypot(*(target - placement).reshape(-1, 2).T)
        if np.all(moved + ledger.pending_travel <= params.cruise_speed * params.frame_duration):
            ledger = replace(ledger, pending_travel=ledger.pending_travel + moved)
            placement = target
            reopt = True
            events.append({"frame": frame, "kind": "reopt", "h_before": rec.h, "h_found": res.best_fitness})

    rec = replace(rec, swaps=n_swaps, reopt=reopt)
    return replace(
        state,
        frame=frame,
        scenario=scenario,
        placement=placement,
        ledger=ledger,
        records=state.records + (rec,),
        events=tuple(events),
    )


def lifespan_metric(result_or_frames, coverage_floor, h_initial=None, n_frames=None):
    """First frame whose coverage falls below ``coverage_floor * h_initial``.

    Returns the number of simulated frames when the floor is never crossed.
    """
    if isinstance(result_or_frames, SimResult):
        frames = result_or_frames.frames
        h_initial = result_or_frames.h_initial if h_initial is None else h_initial
    else:
        frames = tuple(result_or_frames)
    if n_frames is None:
        n_frames = max(f.frame for f in frames)
    for f in frames:
        if f.h < coverage_floor * h_initial:
            return f.frame
    return n_frames


def run_simulation(scenario, sim, woa_params, placement=None):
    """Optimize a deployment (unless ``placement`` is given) and fly it for ``n_frames`` frames."""
    if placement is None:
        placement = run_optimizer(scenario, woa_params).best
    placement = np.asarray(placement, dtype=float)
    ledger = EnergyLedger.full(scenario.n_uavs, scenario.initial_energy)
    rec0, _ = _record(0, scenario, placement, ledger, 0, 0, False, (0.0, 0.0, 0.0))
    state = SimState(0, scenario, placement, ledger, rec0.h, records=(rec0,))
    while state.frame < sim.n_frames:
        state = step_timeframe(state, sim, woa_params)
    return SimResult(
        frames=state.records,
        h_initial=rec0.h,
        lifespan_frames=lifespan_metric(state.records, sim.coverage_floor, rec0.h, sim.n_frames),
        coverage_floor=sim.coverage_floor,
        events=state.events,
        initial_energy_j=float(np.sum(ledger.initial)),
        placement_initial=placement,
        placement_final=state.placement,
    )
