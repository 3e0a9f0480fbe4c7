"""Domain types and the geometric predicates behind coverage and links."""

from dataclasses import dataclass, field, replace
from functools import cached_property
import enum
import math

import numpy as np

from .energy import EnergyParams


class CoverageMode(str, enum.Enum):
    """How UAV-to-user distance is measured for the coverage test.

    ``GROUND2D`` projects the UAV onto the ground; ``SLANT3D`` includes the
    flight altitude. With a 400 m altitude and a 100 m radius nobody is ever
    covered in slant mode, hence the ground default.
    """

    GROUND2D = "ground2d"
    SLANT3D = "slant3d"


@dataclass(frozen=True)
class UserNode:
    id: int
    pos: tuple
    active: bool = True


@dataclass(frozen=True)
class UavNode:
    id: int
    pos: tuple
    residual_energy: float = 0.0

    def __post_init__(self):
        if self.residual_energy < 0:
            raise ValueError("residual energy cannot be negative")


@dataclass(frozen=True)
class Scenario:
    """One immutable problem instance.

    Users sit at ground level; every UAV flies at ``altitude`` and shares the
    same radius ``comm_radius`` for both user coverage and UAV-UAV links.
    """

    area_width: float
    area_height: float
    altitude: float
    n_uavs: int
    comm_radius: float
    users: tuple = ()
    energy: EnergyParams = field(default_factory=EnergyParams)
    initial_energy: float = 1.08e6
    seed: int = 0
    coverage_mode: CoverageMode = CoverageMode.GROUND2D

    def __post_init__(self):
        if not (self.area_width > 0 and self.area_height > 0):
            raise ValueError("area dimensions must be positive")
        if self.altitude < 0:
            raise ValueError("altitude must be >= 0")
        if self.comm_radius <= 0:
            raise ValueError("comm_radius must be > 0")
        if int(self.n_uavs) != self.n_uavs or self.n_uavs < 1:
            raise ValueError("n_uavs must be an integer >= 1")
        if self.initial_energy <= 0:
            raise ValueError("initial_energy must be > 0")
        object.__setattr__(self, "users", tuple(self.users))
        object.__setattr__(self, "coverage_mode", CoverageMode(self.coverage_mode))
        ids = [u.id for u in self.users]
        if len(set(ids)) != len(ids):
            raise ValueError("user ids must be unique")
        for u in self.users:
            x, y = u.pos
            if not (0 <= x <= self.area_width and 0 <= y <= self.area_height):
                raise ValueError(f"user {u.id} at {u.pos} lies outside the area")

    @property
    def m(self):
        return len(self.users)

    @property
    def dim(self):
        return 2 * self.n_uavs

    @cached_property
    def user_xy(self):
        xy = np.array([u.pos for u in self.users], dtype=float).reshape(-1, 2)
        xy.setflags(write=False)
        return xy

    @cached_property
    def user_active(self):
        a = np.array([u.active for u in self.users], dtype=bool)
        a.setflags(write=False)
        return a

    @cached_property
    def upper(self):
        """Per-coordinate upper bounds of a placement vector."""
        ub = np.tile([self.area_width, self.area_height], self.n_uavs).astype(float)
        ub.setflags(write=False)
        return ub

    def coverage_radius_sq_ground(self):
        """Squared ground radius equivalent to the coverage test.

        In slant mode ``dx^2 + dy^2 + H^2 <= r^2`` is rewritten as a ground test
        with radius ``sqrt(r^2 - H^2)``; negative means nobody is covered.
        """
        r2 = self.comm_radius ** 2
        if self.coverage_mode is CoverageMode.SLANT3D:
            return r2 - self.altitude ** 2
        return r2

    def with_users(self, users):
        return replace(self, users=tuple(users))


def ground_distance(a, b):
    return math.hypot(a[0] - b[0], a[1] - b[1])


def slant_distance(uav, user, altitude):
    return math.sqrt((uav[0] - user[0]) ** 2 + (uav[1] - user[1]) ** 2 + altitude ** 2)


def covers_user(uav, user, scenario):
    """True when ``user`` is active and inside the radius of ``uav``; the boundary counts."""
    if not user.active:
        return False
    if scenario.coverage_mode is CoverageMode.SLANT3D:
        d = slant_distance(uav.pos, user.pos, scenario.altitude)
    else:
        d = ground_distance(uav.pos, user.pos)
    return d <= scenario.comm_radius


def uavs_linked(a, b, gamma):
    if a.id == b.id:
        raise ValueError("a UAV cannot link to itself")
    return ground_distance(a.pos, b.pos) <= gamma


def as_placement(coords, scenario):
    """Validate a flat ``[x1, y1, ..., xn, yn]`` vector and return it as a float array."""
    x = np.asarray(coords, dtype=float)
    if x.ndim != 1 or x.shape[0] != scenario.dim:
        raise ValueError(f"placement must have length {scenario.dim} (2 * n_uavs), got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("placement contains non-finite coordinates")
    return x


def clamp(coords, scenario):
    return np.clip(coords, 0.0, scenario.upper)


def uav_nodes(placement, residual=None):
    xy = np.asarray(placement, dtype=float).reshape(-1, 2)
    res = np.zeros(len(xy)) if residual is None else residual
    return [UavNode(i, (float(x), float(y)), float(r)) for i, ((x, y), r) in enumerate(zip(xy, res))]
