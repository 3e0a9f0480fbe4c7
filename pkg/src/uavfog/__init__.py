"""UAV fog-node placement: connected-coverage optimization and lifespan simulation."""

from .config import Config, ConfigError, build_scenario, generate_scenario, parse_config
from .ecnsa import SwapPlan, apply_repositioning, rank_nodes, select_swaps
from .energy import EnergyLedger, EnergyParams, frame_energy_update, network_lifespan_sum
from .lifetime import SimConfig, SimResult, lifespan_metric, run_simulation, step_timeframe
from .model import CoverageMode, Scenario, UavNode, UserNode, covers_user, uavs_linked
from .objective import FitnessReport, evaluate_population, fitness_h
from .pso import PsoParams, run_pso_baseline
from .topology import Topology, build_topology, connectivity_ratio, nc_largest
from .woa import WoaParams, adaptive_schedule, init_population, run_optimizer, woa_step

__version__ = "0.1.0"
