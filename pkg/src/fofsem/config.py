"""Experiment configuration: defaults, flat config-file parsing, validation.

The config file is a flat ``key = value`` format; '#' starts a comment
and list values are comma-separated. Every field can be overridden by a
CLI flag. See configs/example.cfg for an annotated example.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from pathlib import Path

# Paper-sweep defaults: network sizes, ER p grid, BA power grid, WS
# neighborhood sizes, and WS rewiring probabilities.
DEFAULT_SIZES = [10, 50, 100, 200, 300, 400, 500]
DEFAULT_ER_P = [round(0.1 * i, 1) for i in range(1, 10)]
DEFAULT_BA_POWER = [0.5 * i for i in range(7)]
DEFAULT_WS_NEI = [1, 5, 10]
DEFAULT_WS_P = [0.1, 0.3, 0.5, 0.7, 0.9]


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    experiment: str = "jaccard-sweep"  # jaccard-sweep | model-sweep | snap-table
    families: list[str] = field(default_factory=lambda: ["er", "ba", "ws"])
    sizes: list[int] = field(default_factory=lambda: list(DEFAULT_SIZES))
    er_p: list[float] = field(default_factory=lambda: list(DEFAULT_ER_P))
    ba_power: list[float] = field(default_factory=lambda: list(DEFAULT_BA_POWER))
    ba_m: int = 1
    ws_nei: list[int] = field(default_factory=lambda: list(DEFAULT_WS_NEI))
    ws_p: list[float] = field(default_factory=lambda: list(DEFAULT_WS_P))
    trials: int = 500
    base_seed: int = 0
    epsilon: list[float] = field(default_factory=lambda: [0.1])
    agg: list[str] = field(default_factory=lambda: ["mean", "degree"])
    k: int = 2
    out: str = "-"
    workers: int = 1
    datasets: list[str] = field(default_factory=list)  # empty = all (non-large)
    data_dir: str = "data"
    include_large: bool = False
    fetch: bool = False
    drop_empty: bool = False

    def validate(self) -> None:
        if self.experiment not in ("jaccard-sweep", "model-sweep", "snap-table"):
            raise ConfigError(f"unknown experiment {self.experiment!r}")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        for fam in self.families:
            if fam not in ("er", "ba", "ws"):
                raise ConfigError(f"unknown family {fam!r}")
        for n in self.sizes:
            if n < 1:
                raise ConfigError(f"network size must be >= 1, got {n}")
        for p in list(self.er_p) + list(self.ws_p):
            if not 0.0 <= p <= 1.0:
                raise ConfigError(f"probability out of [0,1]: {p}")
        for power in self.ba_power:
            if power < 0:
                raise ConfigError(f"ba power must be >= 0, got {power}")
        if self.ba_m < 1:
            raise ConfigError("ba_m must be >= 1")
        for nei in self.ws_nei:
            if nei < 1:
                raise ConfigError(f"ws nei must be >= 1, got {nei}")
        for eps in self.epsilon:
            if eps < 0:
                raise ConfigError(f"epsilon must be >= 0, got {eps}")
        for a in self.agg:
            if a not in ("mean", "degree"):
                raise ConfigError(f"unknown agg {a!r}")


_LIST_FIELDS = {"families", "sizes", "er_p", "ba_power", "ws_nei", "ws_p",
                "epsilon", "agg", "datasets"}
_FIELD_TYPES = {f.name: f.type for f in fields(ExperimentConfig)}


def _parse_scalar(name: str, raw: str):
    raw = raw.strip()
    ftype = _FIELD_TYPES.get(name, "str")
    if name in ("include_large", "fetch", "drop_empty"):
        if raw.lower() in ("true", "1", "yes", "on"):
            return True
        if raw.lower() in ("false", "0", "no", "off"):
            return False
        raise ConfigError(f"{name}: expected a boolean, got {raw!r}")
    if "int" in str(ftype):
        return int(raw)
    if "float" in str(ftype):
        return float(raw)
    return raw


def _parse_value(name: str, raw: str):
    if name not in _LIST_FIELDS:
        return _parse_scalar(name, raw)
    items = [tok.strip() for tok in raw.split(",") if tok.strip()]
    elem = {"families": str, "sizes": int, "er_p": float, "ba_power": float,
            "ws_nei": int, "ws_p": float, "epsilon": float, "agg": str,
            "datasets": str}[name]
    return [elem(tok) for tok in items]


def parse_config_file(path: str | Path) -> ExperimentConfig:
    cfg = ExperimentConfig()
    known = {f.name for f in fields(ExperimentConfig)}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            setattr(cfg, key, _parse_value(key, raw))
        except (ValueError, TypeError) as err:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {err}") from None
    return cfg


def apply_overrides(cfg: ExperimentConfig, **overrides) -> ExperimentConfig:
    """Return a copy with every non-None override applied."""
    updates = {k: v for k, v in overrides.items() if v is not None}
    return replace(cfg, **updates)
