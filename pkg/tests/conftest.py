import numpy as np
import pytest
from hypothesis import settings

from uavfog.model import Scenario, UserNode

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_ACCEPTANCE = []


@pytest.fixture
def acceptance_log():
    """Collects one summary line per acceptance criterion, printed after the run."""
    return _ACCEPTANCE.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


def make_scenario(users=(), n_uavs=3, gamma=100.0, area=1000.0, altitude=400.0, **kw):
    us = tuple(u if isinstance(u, UserNode) else UserNode(i, tuple(u)) for i, u in enumerate(users))
    return Scenario(area_width=area, area_height=area, altitude=altitude, n_uavs=n_uavs,
                    comm_radius=gamma, users=us, **kw)


def random_scenario(rng, n_uavs, n_users, gamma=100.0, area=1000.0, inactive_frac=0.0):
    xy = rng.random((n_users, 2)) * area
    active = rng.random(n_users) >= inactive_frac
    users = [UserNode(i, (float(x), float(y)), bool(a)) for i, ((x, y), a) in enumerate(zip(xy, active))]
    return make_scenario(users, n_uavs=n_uavs, gamma=gamma, area=area)
