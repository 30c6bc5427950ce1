"""
Run configuration: YAML defaults merged with command-line overrides
"""

import copy
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / 'config' / 'default_config.yaml'

DEFAULTS: Dict[str, Any] = {
    'simulation': {
        'width': 256,
        'height': 256,
        'phasors': 100,
        'amplitude': 1.0,
        'radius': 0,
        'seed': 0,
    },
    'features': {
        'rois': [],
        'band_count': 4,
        'roi_size': 50,
    },
    'classification': {
        'algo': 'knn',
        'bins': 5,
        'threshold': 0.1,
        'alpha': 1.0,
        'discretization': 'equal-frequency',
        'k': 1,
        'standardized': True,
        'holdout': 0.5,
        'seed': 0,
        'positive': 'micro-collapse',
    },
    'monitoring': {
        'debounce': 3,
        'cadence': 72.0,
        'trend_degree': 6,
        'trend_attribute': None,
        'workers': 1,
    },
    'logging': {
        'level': 'WARNING',
        'log_file': None,
    },
}


def deep_merge(base: Dict, override: Dict) -> Dict:
    """Recursively overlay `override` onto a copy of `base`."""
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """
    Load a YAML config merged over the built-in defaults.

    Args:
        path: YAML file; None reads config/default_config.yaml when present

    Returns:
        Nested configuration dict
    """
    source = Path(path) if path else DEFAULT_CONFIG_PATH
    if path is None and not source.exists():
        return copy.deepcopy(DEFAULTS)
    with open(source, 'r', encoding='utf-8') as f:
        try:
            loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as exc:
            raise ValueError(f"{source}: invalid YAML ({exc})") from exc
    if not isinstance(loaded, dict):
        raise ValueError(f"{source}: top level must be a mapping")
    return deep_merge(DEFAULTS, loaded)


@dataclass
class RunConfig:
    """
    Resolved settings for one CLI invocation.

    Attributes:
        command: Subcommand name
        options: Flag values after defaults were applied
        seed: Random seed
        verbosity: 0 = config level, 1 = DEBUG
    """
    command: str
    options: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    verbosity: int = 0

    def get(self, key: str, default: Any = None) -> Any:
        return self.options.get(key, default)

    def validate(self) -> None:
        """
        Check option ranges and flag combinations before any computation.

        Raises:
            ValueError: naming the offending flag
        """
        checks = {
            'width': lambda v: v >= 1,
            'height': lambda v: v >= 1,
            'phasors': lambda v: v >= 1,
            'amplitude': lambda v: v >= 0,
            'radius': lambda v: v >= 0,
            'bins': lambda v: v >= 2,
            'threshold': lambda v: 0.0 <= v <= 1.0,
            'alpha': lambda v: v > 0,
            'k': lambda v: v >= 1,
            'holdout': lambda v: 0.0 < v < 1.0,
            'debounce': lambda v: v >= 1,
            'cadence': lambda v: v > 0,
            'trend_degree': lambda v: v >= 0,
            'workers': lambda v: v >= 1,
            'band_count': lambda v: v >= 1,
            'roi_size': lambda v: v >= 5,
        }
        for key, ok in checks.items():
            value = self.options.get(key)
            if value is not None and not ok(value):
                raise ValueError(f"--{key.replace('_', '-')}: invalid value {value!r}")
        if self.get('model') and self.get('loo'):
            raise ValueError("--loo: retraining needs --algo, not --model")
        if self.seed < 0:
            raise ValueError(f"--seed: must be >= 0, got {self.seed}")
