"""JSON configuration documents and scenario generation.

A document has up to five sections, each mirroring one dataclass field for
field::

    {
      "scenario": {"n_uavs": 45, "n_users": 120, "comm_radius": 100.0, ...},
      "energy":   {"p_hover": 150.0, ...},
      "woa":      {"pop_size": 30, "max_iters": 500, ...},
      "pso":      {"inertia": 0.7298, ...},
      "sim":      {"n_frames": 12, ...},
      "users":    [[x, y], ...]          # optional, written by `generate`
    }

Absent keys take their defaults and are written back by :func:`normalize`;
unknown keys are errors. Seeds live only in ``scenario.seed``; the optimizers
derive theirs from it.
"""

from dataclasses import MISSING, asdict, dataclass, field, fields, replace
import json
import warnings

from . import rng as rngmod
from .energy import EnergyParams
from .lifetime import SimConfig
from .model import CoverageMode, Scenario, UserNode
from .pso import PsoParams
from .woa import WoaParams


class ConfigError(ValueError):
    """Structural problem with a configuration document."""


class RangeWarning(UserWarning):
    """A parameter lies outside the range the reference experiments explored."""


@dataclass(frozen=True)
class ScenarioSpec:
    area_width: float = 1000.0
    area_height: float = 1000.0
    altitude: float = 400.0
    n_uavs: int = 45
    n_users: int = 120
    comm_radius: float = 100.0
    coverage_mode: str = "ground2d"
    initial_energy: float = 1.08e6
    seed: int = 0


# Ranges explored by the reference experiments; outside them we warn only.
ADVISORY_RANGES = {
    "n_uavs": (10, 120),
    "n_users": (30, 200),
    "comm_radius": (90.0, 200.0),
    "altitude": (300.0, 600.0),
}
FRAME_RANGE_S = (1200.0, 3600.0)


@dataclass(frozen=True)
class Config:
    scenario: ScenarioSpec = field(default_factory=ScenarioSpec)
    energy: EnergyParams = field(default_factory=EnergyParams)
    woa: dict = field(default_factory=dict)
    pso: dict = field(default_factory=dict)
    sim: SimConfig = field(default_factory=SimConfig)
    users: tuple = None

    def woa_params(self, **overrides):
        return WoaParams(**{**self.woa, "seed": self.scenario.seed, **overrides})

    def pso_params(self, **overrides):
        return PsoParams(**{**self.pso, "seed": self.scenario.seed, **overrides})


_SECTIONS = {
    "scenario": ScenarioSpec,
    "energy": EnergyParams,
    "woa": WoaParams,
    "pso": PsoParams,
    "sim": SimConfig,
}
_NO_SEED = {"woa", "pso"}


def _coerce(cls, name, value, section):
    f = {f.name: f for f in fields(cls)}[name]
    default = f.default if f.default is not MISSING else None
    kind = type(default) if default is not None else float
    if kind is bool:
        if not isinstance(value, bool):
            raise ConfigError(f"{section}.{name} must be true or false")
        return value
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
            raise ConfigError(f"{section}.{name} must be an integer")
        return int(value)
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{section}.{name} must be a number")
        return float(value)
    if kind is str:
        if not isinstance(value, str):
            raise ConfigError(f"{section}.{name} must be a string")
        return value
    return value


def _section(doc, section):
    cls = _SECTIONS[section]
    raw = doc.get(section, {})
    if not isinstance(raw, dict):
        raise ConfigError(f"section {section!r} must be an object")
    allowed = {f.name for f in fields(cls)} - ({"seed"} if section in _NO_SEED else set())
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise ConfigError(f"unknown key(s) in {section!r}: {', '.join(unknown)}")
    values = {k: _coerce(cls, k, v, section) for k, v in raw.items()}
    try:
        obj = cls(**values)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{section}: {exc}") from exc
    return _without_seed(obj) if section in _NO_SEED else obj


def parse_config(doc):
    """Validate a decoded JSON document and return a :class:`Config`."""
    if not isinstance(doc, dict):
        raise ConfigError("configuration must be a JSON object")
    unknown = sorted(set(doc) - set(_SECTIONS) - {"users"})
    if unknown:
        raise ConfigError(f"unknown top-level key(s): {', '.join(unknown)}")
    parts = {name: _section(doc, name) for name in _SECTIONS}
    spec = parts["scenario"]
    try:
        CoverageMode(spec.coverage_mode)
    except ValueError:
        raise ConfigError(f"scenario.coverage_mode must be one of {[m.value for m in CoverageMode]}") from None
    if spec.n_users < 0:
        raise ConfigError("scenario.n_users must be >= 0")
    if not 0 <= spec.seed < 2 ** 64:
        raise ConfigError("scenario.seed must be an unsigned 64-bit integer")

    users = doc.get("users")
    if users is not None:
        try:
            users = tuple((float(x), float(y)) for x, y in users)
        except (TypeError, ValueError):
            raise ConfigError("users must be a list of [x, y] pairs") from None
        if len(users) != spec.n_users:
            raise ConfigError(f"users lists {len(users)} positions but scenario.n_users is {spec.n_users}")
    cfg = Config(users=users, **parts)
    _warn_ranges(cfg)
    # Building the scenario validates positions against the area.
    try:
        build_scenario(cfg)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return cfg


def _warn_ranges(cfg):
    for key, (lo, hi) in ADVISORY_RANGES.items():
        v = getattr(cfg.scenario, key)
        if not lo <= v <= hi:
            warnings.warn(f"scenario.{key}={v} is outside the explored range [{lo}, {hi}]", RangeWarning, stacklevel=3)
    fd = cfg.energy.frame_duration
    if not FRAME_RANGE_S[0] <= fd <= FRAME_RANGE_S[1]:
        warnings.warn(f"energy.frame_duration={fd} s is outside [1200, 3600] s", RangeWarning, stacklevel=3)


def _without_seed(params):
    d = asdict(params)
    d.pop("seed")
    return d


def normalize(cfg):
    """The fully populated document for ``cfg`` as a plain dict."""
    doc = {
        "scenario": asdict(cfg.scenario),
        "energy": asdict(cfg.energy),
        "woa": _without_seed(WoaParams(**cfg.woa)),
        "pso": _without_seed(PsoParams(**cfg.pso)),
        "sim": asdict(cfg.sim),
    }
    if cfg.users is not None:
        doc["users"] = [list(p) for p in cfg.users]
    return doc


def dumps(cfg):
    return json.dumps(normalize(cfg), indent=2, sort_keys=True) + "\n"


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc}") from exc
    return parse_config(doc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def user_positions(spec):
    """Uniform user positions for ``spec`` drawn from the scenario seed."""
    g = rngmod.stream(spec.seed, rngmod.USERS)
    xy = g.random((spec.n_users, 2)) * [spec.area_width, spec.area_height]
    return tuple((float(x), float(y)) for x, y in xy)


def build_scenario(cfg):
    spec = cfg.scenario
    positions = cfg.users if cfg.users is not None else user_positions(spec)
    return Scenario(
        area_width=spec.area_width,
        area_height=spec.area_height,
        altitude=spec.altitude,
        n_uavs=spec.n_uavs,
        comm_radius=spec.comm_radius,
        users=tuple(UserNode(i, p) for i, p in enumerate(positions)),
        energy=cfg.energy,
        initial_energy=spec.initial_energy,
        seed=spec.seed,
        coverage_mode=CoverageMode(spec.coverage_mode),
    )


def generate_scenario(cfg):
    """Materialize the users of ``cfg``; returns ``(scenario, cfg_with_users)``."""
    users = cfg.users if cfg.users is not None else user_positions(cfg.scenario)
    cfg = replace(cfg, users=users)
    return build_scenario(cfg), cfg


def default_config(**scenario_overrides):
    return Config(scenario=ScenarioSpec(**scenario_overrides))


def with_scenario(cfg, **overrides):
    """Copy of ``cfg`` with scenario fields replaced; explicit users are dropped if the count changes."""
    spec = replace(cfg.scenario, **overrides)
    users = cfg.users
    if users is not None and (len(users) != spec.n_users or "seed" in overrides or "area_width" in overrides
                              or "area_height" in overrides):
        users = None
    return replace(cfg, scenario=spec, users=users)

