import math

import numpy as np
import pytest

from uavfog.pso import PsoParams, run_pso_baseline
from uavfog.search import is_elitist
from uavfog.woa import WoaParams, run_optimizer

from conftest import make_scenario, random_scenario


def cluster_scenario():
    rng = np.random.default_rng(4)
    ang, rad = rng.random(15) * 2 * math.pi, rng.random(15) * 20.0
    users = [(300 + r * math.cos(a), 700 + r * math.sin(a)) for a, r in zip(ang, rad)]
    return make_scenario(users, n_uavs=1, gamma=100.0)


def test_cluster_fits_in_one_disk():
    s = cluster_scenario()
    # exhaustive oracle: a disk centred on the cluster centre covers every user
    assert all(math.dist((300, 700), u.pos) <= s.comm_radius for u in s.users)


@pytest.mark.parametrize("run,params", [(run_pso_baseline, PsoParams(max_iters=60, seed=1)),
                                        (run_optimizer, WoaParams(max_iters=60, seed=1))])
def test_toy_instance_reaches_full_coverage(run, params):
    res = run(cluster_scenario(), params)
    assert res.best_fitness == 1.0


def test_deterministic_and_elitist():
    s = random_scenario(np.random.default_rng(0), 6, 30, gamma=150.0, area=500.0)
    a = run_pso_baseline(s, PsoParams(pop_size=8, max_iters=40, seed=2))
    b = run_pso_baseline(s, PsoParams(pop_size=8, max_iters=40, seed=2))
    assert a.trace == b.trace and len(a.trace) == 41
    assert is_elitist(a.trace)
    assert all(math.isnan(r.a_value) for r in a.trace)


def test_params_validated():
    with pytest.raises(ValueError):
        PsoParams(vmax_frac=0)
