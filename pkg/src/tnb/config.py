"""Declarative run configuration.

A run is one YAML document with a section per subsystem. Every field has
a default; unknown sections or keys are rejected by name. ``to_dict`` /
``from_dict`` round-trip exactly, and the fully resolved document is
echoed into each run directory as ``resolved_config.yaml``.
"""

import dataclasses
from dataclasses import dataclass, field

import yaml

from .errors import ConfigError
from .novelty.autoencoder import DEFAULT_HIDDEN, AeTrainingConfig
from .novelty.segments import SegmentConfig
from .pg.train import COMBINERS, PpoConfig


@dataclass
class EnvSection:
    name: str = "fourway"
    params: dict = field(default_factory=dict)


@dataclass
class TrialSection:
    k: int = 4
    combiner: str = "tnb"
    wsr_weight: float = 100.0
    per_policy_budget: int = 100_000
    seed: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ConfigError("trial.k must be >= 1")
        if self.combiner not in COMBINERS:
            raise ConfigError(f"unknown combiner {self.combiner!r}; choices: {COMBINERS}")
        if self.per_policy_budget <= 0:
            raise ConfigError("trial.per_policy_budget must be positive")
        if self.wsr_weight < 0:
            raise ConfigError("trial.wsr_weight must be >= 0")


@dataclass
class AutoencoderSection:
    hidden: tuple = DEFAULT_HIDDEN
    epochs: int = 200
    batch_size: int = 1024
    learning_rate: float = 1e-3
    std_floor: float = 1e-3

    def __post_init__(self):
        self.hidden = tuple(self.hidden)
        if self.epochs < 0:
            raise ConfigError("autoencoder.epochs must be >= 0")
        if self.batch_size <= 0:
            raise ConfigError("autoencoder.batch_size must be positive")

    def training(self):
        return AeTrainingConfig(
            epochs=self.epochs,
            batch_size=self.batch_size,
            learning_rate=self.learning_rate,
            std_floor=self.std_floor,
        )


@dataclass
class AeDataSection:
    snapshots: int = 10
    snapshot_window: int = 50
    rollouts_per_snapshot: int = 100

    def __post_init__(self):
        if min(self.snapshots, self.snapshot_window, self.rollouts_per_snapshot) <= 0:
            raise ConfigError("ae_data values must be positive")


@dataclass
class EvalSection:
    episodes: int = 1

    def __post_init__(self):
        if self.episodes <= 0:
            raise ConfigError("eval.episodes must be positive")


@dataclass
class OutputSection:
    dir: str = None


@dataclass
class RunConfig:
    env: EnvSection = field(default_factory=EnvSection)
    trial: TrialSection = field(default_factory=TrialSection)
    ppo: PpoConfig = field(default_factory=PpoConfig)
    segment: SegmentConfig = field(default_factory=SegmentConfig)
    autoencoder: AutoencoderSection = field(default_factory=AutoencoderSection)
    ae_data: AeDataSection = field(default_factory=AeDataSection)
    eval: EvalSection = field(default_factory=EvalSection)
    output: OutputSection = field(default_factory=OutputSection)


_SECTIONS = {
    "env": EnvSection,
    "trial": TrialSection,
    "ppo": PpoConfig,
    "segment": SegmentConfig,
    "autoencoder": AutoencoderSection,
    "ae_data": AeDataSection,
    "eval": EvalSection,
    "output": OutputSection,
}


def _build_section(cls, data, section):
    if not isinstance(data, dict):
        raise ConfigError(f"section {section!r} must be a mapping")
    fields = {f.name: f for f in dataclasses.fields(cls)}
    unknown = set(data) - set(fields)
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r} in section {section!r}")
    kwargs = {}
    for name, value in data.items():
        default = fields[name].default
        if default is not dataclasses.MISSING and value is not None:
            if isinstance(default, bool):
                if not isinstance(value, bool):
                    raise ConfigError(f"{section}.{name} must be a boolean")
            elif isinstance(default, int) and not isinstance(value, bool):
                if isinstance(value, float) and not value.is_integer():
                    raise ConfigError(f"{section}.{name} must be an integer")
                value = int(value)
            elif isinstance(default, float):
                if not isinstance(value, (int, float)) or isinstance(value, bool):
                    raise ConfigError(f"{section}.{name} must be a number")
                value = float(value)
        kwargs[name] = value
    try:
        return cls(**kwargs)
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid section {section!r}: {exc}") from exc


def from_dict(doc):
    if doc is None:
        doc = {}
    if not isinstance(doc, dict):
        raise ConfigError("configuration must be a mapping of sections")
    unknown = set(doc) - set(_SECTIONS)
    if unknown:
        raise ConfigError(f"unknown section {sorted(unknown)[0]!r}")
    kwargs = {
        name: _build_section(cls, doc.get(name, {}) or {}, name)
        for name, cls in _SECTIONS.items()
    }
    return RunConfig(**kwargs)


def to_dict(config):
    """Plain-YAML-safe dict of the fully resolved configuration."""

    def clean(value):
        if isinstance(value, tuple):
            return [clean(v) for v in value]
        if isinstance(value, dict):
            return {k: clean(v) for k, v in value.items()}
        return value

    out = {}
    for name in _SECTIONS:
        section = getattr(config, name)
        out[name] = {
            f.name: clean(getattr(section, f.name)) for f in dataclasses.fields(section)
        }
    return out


def load_config(path, overrides=()):
    try:
        with open(path) as fh:
            doc = yaml.safe_load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except yaml.YAMLError as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc
    doc = apply_overrides(doc or {}, overrides)
    return from_dict(doc)


def apply_overrides(doc, overrides):
    """Apply ``section.key=value`` strings; values parse as YAML scalars."""
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not of the form key=value")
        dotted, raw = item.split("=", 1)
        keys = dotted.strip().split(".")
        if not all(keys):
            raise ConfigError(f"override {item!r} has an empty key component")
        try:
            value = yaml.safe_load(raw)
        except yaml.YAMLError as exc:
            raise ConfigError(f"cannot parse override value {raw!r}: {exc}") from exc
        node = doc
        for key in keys[:-1]:
            nxt = node.setdefault(key, {})
            if not isinstance(nxt, dict):
                raise ConfigError(f"override {item!r} descends through a scalar")
            node = nxt
        node[keys[-1]] = value
    return doc


def dump_config(config, path):
    with open(path, "w") as fh:
        yaml.safe_dump(to_dict(config), fh, sort_keys=False)
