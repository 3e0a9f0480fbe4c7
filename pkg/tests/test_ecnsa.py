from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, strategies as st

from uavfog.ecnsa import SwapPlan, SwapThresholds, apply_repositioning, rank_nodes, select_swaps
from uavfog.energy import EnergyLedger, EnergyParams, frame_energy_update
from uavfog.topology import build_topology

from conftest import make_scenario, random_scenario

P = EnergyParams()
CAP = 1.0e6


def spread_instance(counts, energy_frac):
    """UAVs 300 m apart on a row, UAV i with counts[i] users within 30 m."""
    n = len(counts)
    xy = [(100.0 + 300.0 * i, 500.0) for i in range(n)]
    users = []
    for (x, y), k in zip(xy, counts):
        users += [(x + 30.0 * np.cos(2 * np.pi * j / max(k, 1)), y + 30.0 * np.sin(2 * np.pi * j / max(k, 1)))
                  for j in range(k)]
    s = make_scenario(users, n_uavs=n, area=300.0 * n + 200)
    place = np.ravel(xy)
    led = replace(EnergyLedger.full(n, CAP), residual=np.asarray(energy_frac, dtype=float) * CAP)
    return s, place, build_topology(place, s, led.alive), led


def test_rank_examples():
    _, _, topo, led = spread_instance([2, 2, 7], [5, 9, 1])
    by_e, by_c = rank_nodes(topo, led)
    assert by_e == [1, 0, 2] and by_c == [2, 0, 1]


def test_rank_excludes_dead():
    _, _, topo, led = spread_instance([2, 2, 7], [0.5, 0.0, 0.1])
    by_e, by_c = rank_nodes(topo, led)
    assert 1 not in by_e and 1 not in by_c
    with pytest.raises(ValueError):
        rank_nodes(topo, replace(led, residual=np.zeros(3)))


def test_high_energy_sparse_pairs_with_low_energy_dense():
    # A covers 2, B covers 10, two fillers at 4 -> median 4
    _, _, topo, led = spread_instance([2, 10, 4, 4], [0.9, 0.2, 0.5, 0.5])
    plan = select_swaps(rank_nodes(topo, led), topo, led)
    assert plan.swaps == ((0, 1),)
    assert plan.projected_travel[0] == plan.projected_travel[1] == 300.0


def test_uniform_fleet_gives_empty_plan():
    _, _, topo, led = spread_instance([3, 3, 3, 3], [0.5] * 4)
    assert len(select_swaps(rank_nodes(topo, led), topo, led)) == 0


def test_shared_partner_keeps_highest_ranked_pair():
    # sparse S1 (0.9), S2 (0.8); dense D (0.2, 10 users), D2 (0.75, 8 users)
    # eligible: (S1,D) (S2,D) (S1,D2); greedy keeps (S1,D) only
    _, _, topo, led = spread_instance([1, 1, 10, 8, 5, 5, 5], [0.9, 0.8, 0.2, 0.75, 0.5, 0.5, 0.5])
    plan = select_swaps(rank_nodes(topo, led), topo, led)
    assert plan.swaps == ((0, 2),)


def test_empty_plan_changes_nothing():
    s, place, _, led = spread_instance([2, 2], [0.5, 0.5])
    out = apply_repositioning(place, SwapPlan((), np.zeros(2), ()), led, P)
    np.testing.assert_array_equal(out.placement, place)
    np.testing.assert_array_equal(out.ledger.residual, led.residual)
    assert not out.ledger.pending_travel.any()


def test_120m_swap_costs_2400j_each():
    s = make_scenario(n_uavs=2)
    place = np.array([100.0, 100.0, 220.0, 100.0])
    led = EnergyLedger.full(2, CAP)
    out = apply_repositioning(place, SwapPlan(((0, 1),), np.full(2, 120.0), ((0, 0, 0, 0),)), led, P, s)
    assert out.travel_j.tolist() == pytest.approx([2400.0, 2400.0])
    np.testing.assert_array_equal(out.placement, [220.0, 100.0, 100.0, 100.0])
    charged = frame_energy_update(out.ledger, out.ledger.pending_travel, build_topology(out.placement, s), P)
    assert charged.travel_j.tolist() == pytest.approx([2400.0, 2400.0])
    assert out.nls == pytest.approx(CAP)  # 120 m > gamma, so G* is a singleton


def test_infeasible_swap_dropped():
    s = make_scenario(n_uavs=2, area=30000)
    place = np.array([0.0, 0.0, 20000.0, 0.0])
    out = apply_repositioning(place, SwapPlan(((0, 1),), np.zeros(2), ((0, 0, 0, 0),)),
                              EnergyLedger.full(2, CAP), P)
    assert out.dropped == ((0, 1),) and out.applied == ()
    np.testing.assert_array_equal(out.placement, place)


def test_coverage_sets_exchanged():
    s, place, topo, led = spread_instance([2, 6], [0.9, 0.1])
    out = apply_repositioning(place, SwapPlan(((0, 1),), np.zeros(2), ((2, 6, 0, 0),)), led, P)
    after = build_topology(out.placement, s)
    assert list(after.cover_count) == [6, 2]
    np.testing.assert_array_equal(after.serving_uav == 0, topo.serving_uav == 1)


@given(st.integers(0, 2 ** 32 - 1))
def test_swaps_preserve_network_and_are_disjoint(seed):
    rng = np.random.default_rng(seed)
    n = 12
    s = random_scenario(rng, n, 80, gamma=150.0, area=600.0)
    place = rng.random(2 * n) * 600.0
    led = replace(EnergyLedger.full(n, CAP), residual=rng.random(n) * CAP)
    topo = build_topology(place, s, led.alive)
    plan = select_swaps(rank_nodes(topo, led), topo, led, SwapThresholds(0.05))
    flat = [u for pair in plan.swaps for u in pair]
    assert len(flat) == len(set(flat))
    assert all(led.alive[u] for u in flat)
    after = build_topology(apply_repositioning(place, plan, led, P).placement, s, led.alive)
    assert sorted(map(len, after.components)) == sorted(map(len, topo.components))
    np.testing.assert_array_equal(after.user_cover_any, topo.user_cover_any)
    sizes = [len(c) for c in topo.components]
    if sizes.count(max(sizes)) == 1:
        np.testing.assert_array_equal(after.user_cover_largest, topo.user_cover_largest)
