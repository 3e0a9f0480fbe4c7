"""Air-to-ground channel, link rates and per-frame UAV energy accounting."""

from dataclasses import dataclass, field, fields, replace
import enum

import numpy as np


class Direction(enum.Enum):
    UPLINK = "uplink"
    DOWNLINK = "downlink"


@dataclass(frozen=True)
class EnergyParams:
    """Power, radio and traffic constants.

    The defaults are plausible small-multirotor magnitudes, not measured
    values; override them per scenario.
    """

    p_hover: float = 150.0  # W
    p_travel: float = 200.0  # W
    cruise_speed: float = 10.0  # m/s
    p_transmit_uav: float = 0.1  # W, P_e
    p_receive_uav: float = 0.1  # W, P_r
    p_transmit_user: float = 0.1  # W, P_u
    p_transmit_uav_dl: float = 0.1  # W, P_f
    bandwidth: float = 1e6  # Hz
    beta0: float = 1e-4  # channel gain at 1 m
    noise_sigma2: float = 1e-13  # W
    input_data_bits: float = 1e6  # per user per frame
    output_data_bits: float = 0.5e6
    frame_duration: float = 1800.0  # s

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (np.isfinite(v) and v > 0):
                raise ValueError(f"energy parameter {f.name} must be finite and > 0, got {v!r}")


def _sq_range(uav_pos, user_pos, altitude):
    uav_pos = np.asarray(uav_pos, dtype=float)
    user_pos = np.asarray(user_pos, dtype=float)
    d = uav_pos - user_pos
    return np.sum(d * d, axis=-1) + altitude * altitude


def channel_gain(uav_pos, user_pos, altitude, beta0):
    """LoS gain ``beta0 / r^2`` where r is the UAV-user slant range."""
    r2 = _sq_range(uav_pos, user_pos, altitude)
    if np.any(r2 <= 0):
        raise ValueError("channel gain undefined for coincident UAV and user at zero altitude")
    return beta0 / r2


def link_rate(direction, uav_pos, user_pos, altitude, params):
    """Shannon rate in bit/s for one UAV-user link.

    Uplink uses the UAV transmit power P_e and downlink uses P_f; the gain is
    reciprocal so both see the same channel.
    """
    power = params.p_transmit_uav if Direction(direction) is Direction.UPLINK else params.p_transmit_uav_dl
    g = channel_gain(uav_pos, user_pos, altitude, params.beta0)
    return params.bandwidth * np.log2(1.0 + power * g / params.noise_sigma2)


def comm_energy_frame(uav_pos, user_positions, altitude, params):
    """Joules spent by one UAV serving ``user_positions`` for one frame."""
    user_positions = np.asarray(user_positions, dtype=float).reshape(-1, 2)
    if len(user_positions) == 0:
        return 0.0
    r_up = link_rate(Direction.UPLINK, uav_pos, user_positions, altitude, params)
    r_dn = link_rate(Direction.DOWNLINK, uav_pos, user_positions, altitude, params)
    if np.any(r_up <= 0) or np.any(r_dn <= 0):
        raise ValueError("zero link rate")
    e = params.p_transmit_uav * params.input_data_bits / r_up + params.p_receive_uav * params.output_data_bits / r_dn
    return float(np.sum(e))


def motion_energy_frame(travel_dist, params):
    """Split one frame into travel then hover; returns ``(travel_j, hover_j)``."""
    if travel_dist < 0:
        raise ValueError("travel distance must be non-negative")
    t_travel = travel_dist / params.cruise_speed
    if t_travel > params.frame_duration:
        raise ValueError(
            f"travel of {travel_dist:.1f} m takes {t_travel:.1f} s, longer than the "
            f"{params.frame_duration:.0f} s frame"
        )
    return params.p_travel * t_travel, params.p_hover * (params.frame_duration - t_travel)


@dataclass(frozen=True)
class EnergyLedger:
    """Residual energy per UAV plus the breakdown of the last charged frame.

    ``consumed`` accumulates everything ever debited so that
    ``initial - residual == consumed`` can be audited at any point.
    """

    residual: np.ndarray
    hover_j: np.ndarray
    travel_j: np.ndarray
    comm_j: np.ndarray
    consumed: np.ndarray
    initial: np.ndarray
    pending_travel: np.ndarray = field(default=None)

    @classmethod
    def full(cls, n, initial_energy):
        z = np.zeros(n)
        return cls(
            residual=np.full(n, float(initial_energy)),
            hover_j=z.copy(),
            travel_j=z.copy(),
            comm_j=z.copy(),
            consumed=z.copy(),
            initial=np.full(n, float(initial_energy)),
            pending_travel=z.copy(),
        )

    @property
    def alive(self):
        return self.residual > 0

    @property
    def n(self):
        return len(self.residual)

    def frame_total(self):
        return self.hover_j + self.travel_j + self.comm_j


def frame_energy_update(ledger, per_uav_travel, topology, params):
    """Charge one frame of hover, travel and communication to every live UAV.

    ``per_uav_travel`` is the distance each UAV flies at the start of the frame;
    the rest of the frame is spent hovering. Communication is charged for the
    users each UAV covers in ``topology`` (a user covered by several UAVs is
    served by the nearest one). Residuals are floored at zero and a UAV that
    reaches zero is dead from then on.
    """
    n = ledger.n
    travel = np.zeros(n) if per_uav_travel is None else np.asarray(per_uav_travel, dtype=float)
    alive = ledger.alive
    hover_j = np.zeros(n)
    travel_j = np.zeros(n)
    comm_j = np.zeros(n)
    serving = topology.serving_uav
    users_xy = topology.user_xy
    for i in np.flatnonzero(alive):
        travel_j[i], hover_j[i] = motion_energy_frame(travel[i], params)
        served = users_xy[serving == i]
        comm_j[i] = comm_energy_frame(topology.uav_xy[i], served, topology.altitude, params)

    demand = hover_j + travel_j + comm_j
    residual = ledger.residual.copy()
    # A UAV that runs dry mid-frame only spends what it had; scale its
    # breakdown so the books still balance.
    short = alive & (demand > residual)
    if np.any(short):
        scale = np.ones(n)
        scale[short] = residual[short] / demand[short]
        hover_j *= scale
        travel_j *= scale
        comm_j *= scale
        demand = hover_j + travel_j + comm_j
    residual[alive] = residual[alive] - demand[alive]
    residual[short] = 0.0
    residual = np.maximum(residual, 0.0)
    return replace(
        ledger,
        residual=residual,
        hover_j=hover_j,
        travel_j=travel_j,
        comm_j=comm_j,
        consumed=ledger.consumed + demand,
        pending_travel=np.zeros(n),
    )


def network_lifespan_sum(ledger, topology):
    """Residual energy summed over the members of the largest component."""
    members = sorted(topology.largest_component)
    return float(np.sum(ledger.residual[members])) if members else 0.0
