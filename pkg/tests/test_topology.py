import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from uavfog.model import UserNode
from uavfog.topology import _components, build_topology, connectivity_ratio, nc_largest, pick_largest

from conftest import make_scenario


def closure_components(xy, gamma, alive):
    """Reachability oracle: Warshall transitive closure over the link relation."""
    n = len(xy)
    reach = [[alive[i] and alive[j] and (i == j or (xy[i][0] - xy[j][0]) ** 2 + (xy[i][1] - xy[j][1]) ** 2
              <= gamma ** 2) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    comps = {tuple(j for j in range(n) if reach[i][j]) for i in range(n) if alive[i]}
    return sorted(comps)


def oracle_largest(comps):
    best = ()
    for c in comps:
        if len(c) > len(best) or (len(c) == len(best) and min(c) < min(best)):
            best = c
    return frozenset(best)


def test_three_uav_example():
    s = make_scenario(n_uavs=3)
    t = build_topology([0, 0, 50, 0, 500, 500], s)
    assert t.adjacency == ((1,), (0,), ())
    assert t.components == ((0, 1), (2,))
    assert t.largest_component == {0, 1}
    assert nc_largest(t) == 2
    assert connectivity_ratio(t) == pytest.approx(0.6667, abs=1e-4)


def test_singleton_and_no_users():
    s = make_scenario(n_uavs=1)
    t = build_topology([10, 10], s)
    assert t.components == ((0,),) and t.largest_component == {0}
    assert t.user_cover_any.shape == (0,)
    s = make_scenario([UserNode(0, (0, 0), False), UserNode(1, (5, 0), False)], n_uavs=1)
    t = build_topology([0, 0], s)
    assert not t.user_cover_any.any() and not t.user_cover_largest.any()


def test_malformed_placement_rejected():
    with pytest.raises(ValueError):
        build_topology([0, 0, 1], make_scenario(n_uavs=2))


def test_chain_and_isolated():
    n = 10
    s = make_scenario(n_uavs=n)
    chain = np.column_stack([np.arange(n) * 90.0, np.zeros(n)]).ravel()
    t = build_topology(chain, s)
    assert nc_largest(t) == n and connectivity_ratio(t) == 1.0
    iso = np.column_stack([np.arange(n) * 101.0, np.zeros(n)]).ravel()
    t = build_topology(iso, s)
    assert nc_largest(t) == 1 and connectivity_ratio(t) == pytest.approx(0.1)
    assert t.largest_component == {0}


def test_tie_goes_to_smallest_index():
    s = make_scenario(n_uavs=4)
    # components {1,3} and {0,2}: equal size, {0,2} holds the smaller index
    t = build_topology([0, 0, 500, 500, 50, 0, 550, 500], s)
    assert t.largest_component == {0, 2}


def test_dead_uavs_excluded():
    s = make_scenario(n_uavs=3)
    t = build_topology([0, 0, 90, 0, 180, 0], s, alive=[True, False, True])
    assert t.components == ((0,), (2,))
    assert connectivity_ratio(t) == pytest.approx(1 / 3)
    assert t.adjacency[1] == ()


placements = st.integers(1, 12).flatmap(
    lambda n: st.tuples(
        st.lists(st.tuples(st.floats(0, 400), st.floats(0, 400)), min_size=n, max_size=n),
        st.lists(st.booleans(), min_size=n, max_size=n),
        st.floats(20, 200),
    )
)


@given(placements)
def test_components_match_closure_oracle(case):
    xy, alive, gamma = case
    n = len(xy)
    s = make_scenario(n_uavs=n, gamma=gamma)
    t = build_topology(np.ravel(xy), s, alive=alive)
    expect = closure_components(xy, gamma, alive)
    assert sorted(t.components) == expect
    assert t.largest_component == oracle_largest(expect)
    assert sum(len(c) for c in t.components) == sum(alive)


graphs = st.integers(1, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
)


def _adj(n, edges):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return tuple(tuple(sorted(x)) for x in adj)


@given(graphs, st.integers(0, 9), st.integers(0, 9))
def test_adding_edge_never_shrinks_largest(g, a, b):
    n, edges = g
    a, b = a % n, b % n
    alive = np.ones(n, dtype=bool)
    before = len(pick_largest(_components(_adj(n, edges), alive)))
    after = len(pick_largest(_components(_adj(n, edges | {(a, b)}), alive)))
    assert after >= before


@given(graphs, st.integers(0, 9))
def test_removing_uav_never_grows_largest(g, k):
    n, edges = g
    alive = np.ones(n, dtype=bool)
    before = len(pick_largest(_components(_adj(n, edges), alive)))
    alive[k % n] = False
    adj = _adj(n, {(a, b) for a, b in edges if alive[a] and alive[b]})
    assert len(pick_largest(_components(adj, alive))) <= before


def test_serving_uav_is_nearest_cover():
    s = make_scenario([(60, 0), (900, 900)], n_uavs=2)
    t = build_topology([0, 0, 100, 0], s)
    assert list(t.serving_uav) == [1, -1]
    assert list(t.cover_count) == [1, 1]
