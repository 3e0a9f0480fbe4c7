from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from uavfog.energy import EnergyParams
from uavfog.lifetime import FrameRecord, SimConfig, lifespan_metric, run_simulation
from uavfog.woa import WoaParams

from conftest import make_scenario, random_scenario

WP = WoaParams(pop_size=8, max_iters=30)


def scen(seed=0, e0=1.08e6, energy=EnergyParams(), n=8, m=60):
    s = random_scenario(np.random.default_rng(seed), n, m, gamma=150.0, area=600.0)
    return replace(s, initial_energy=e0, energy=energy, seed=seed)


def frames(hs):
    return [FrameRecord(i, h, 1.0, 1, 0.0, 0.0, 0, 0, False, 0.0, 0.0, 0.0) for i, h in enumerate(hs)]


def test_lifespan_metric_examples():
    assert lifespan_metric(frames([0.6] * 6), 0.8, h_initial=0.6) == 5
    assert lifespan_metric(frames([0.6, 0.6, 0.6, 0.3, 0.3]), 0.8, h_initial=0.6) == 3
    assert lifespan_metric(frames([0.6, 0.0, 0.0]), 0.0, h_initial=0.6) == 2


def test_stationary_system_keeps_h():
    s = scen(e0=1e12)
    res = run_simulation(s, SimConfig(n_frames=5, user_toggle_prob=0, user_jitter_sigma=0), WP)
    assert len({f.h for f in res.frames}) == 1
    assert len({f.connectivity_ratio for f in res.frames}) == 1
    assert res.lifespan_frames == 5


def test_exact_hover_frame_dies_at_frame_one():
    s = replace(make_scenario(n_uavs=1), initial_energy=270000.0)
    res = run_simulation(s, SimConfig(n_frames=3), WP, placement=[500.0, 500.0])
    f = res.frames
    assert (f[0].alive, f[1].alive, f[1].deaths) == (1, 0, 1)
    assert f[1].h == 0.0 and f[1].connectivity_ratio == 0.0
    assert f[2].total_residual_j == 0.0 and f[2].hover_j == 0.0


def test_all_dead_is_absorbing():
    s = scen(e0=300000.0)
    res = run_simulation(s, SimConfig(n_frames=4), WP)
    tail = res.frames[2:]
    assert all(f.alive == 0 and f.h == 0.0 and f.connectivity_ratio == 0.0 for f in tail)


def test_deterministic():
    s = scen(seed=2)
    a = run_simulation(s, SimConfig(n_frames=4), WP)
    b = run_simulation(s, SimConfig(n_frames=4), WP)
    assert a.frames == b.frames and a.events == b.events


def test_ecnsa_toggle_same_start():
    s = scen(seed=3)
    on = run_simulation(s, SimConfig(n_frames=3, ecnsa_enabled=True), WP)
    off = run_simulation(s, SimConfig(n_frames=3, ecnsa_enabled=False), WP)
    assert on.frames[0] == off.frames[0]
    assert on.frames[1].h == off.frames[1].h


def _comm_heavy():
    # Traffic large enough that load differences separate UAV residuals within a few frames.
    return EnergyParams(p_hover=20.0, p_receive_uav=5.0, output_data_bits=2e8)


@settings(max_examples=12)
@given(st.integers(0, 10_000), st.booleans())
def test_ledger_invariants(seed, ecnsa):
    s = scen(seed=seed, e0=2e5, energy=_comm_heavy())
    res = run_simulation(s, SimConfig(n_frames=8, ecnsa_enabled=ecnsa, swap_min_energy_gap=0.02), WP)
    f = res.frames
    assert all(b.alive <= a.alive for a, b in zip(f, f[1:]))
    assert all(b.total_residual_j <= a.total_residual_j for a, b in zip(f, f[1:]))
    assert all(r.total_residual_j >= 0 for r in f)
    lhs = res.initial_energy_j - res.final_residual_j
    assert abs(lhs - res.consumed_j) <= 1e-9 * res.initial_energy_j
    deaths = sum(e["kind"] == "death" for e in res.events)
    assert deaths == sum(r.deaths for r in f) == f[0].alive - f[-1].alive


def test_swaps_happen_under_comm_heavy_load():
    s = scen(seed=1, e0=2e5, energy=_comm_heavy(), n=10, m=120)
    res = run_simulation(s, SimConfig(n_frames=6, swap_min_energy_gap=0.02), WP)
    swaps = [e for e in res.events if e["kind"] == "swap"]
    assert swaps and sum(f.swaps for f in res.frames) == len(swaps)
    assert all(e["energy_j"][0] > e["energy_j"][1] and e["users"][0] < e["users"][1] for e in swaps)


def test_reoptimization_warm_start():
    s = scen(seed=4, e0=2e5, energy=_comm_heavy())
    res = run_simulation(s, SimConfig(n_frames=5, reopt_trigger=1.0, reopt_iters=10, ecnsa_enabled=False), WP)
    assert any(f.reopt for f in res.frames) == any(e["kind"] == "reopt" for e in res.events)
    for e in res.events:
        if e["kind"] == "reopt":
            assert e["h_found"] >= e["h_before"] - 1e-12


def test_sim_config_validated():
    with pytest.raises(ValueError):
        SimConfig(n_frames=0)
    with pytest.raises(ValueError):
        SimConfig(user_toggle_prob=1.5)
