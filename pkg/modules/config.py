"""Configuration management for coalesce."""
import copy
import os
import yaml
from typing import Dict, Any, Optional

from .errors import ConfigError

ENV_LIMIT = "COALESCE_LIMIT"


def load_config(config_file: Optional[str] = "config.yaml") -> Dict[str, Any]:
    """Load configuration from YAML file, merged over the defaults."""
    config = get_default_config()
    if not config_file or not os.path.exists(config_file):
        return config

    with open(config_file, 'r') as f:
        try:
            loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Could not parse {config_file}: {e}", {"file": config_file}) from e

    if not isinstance(loaded, dict):
        raise ConfigError(f"{config_file} must contain a mapping", {"file": config_file})
    return _merge(config, loaded)


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def get_default_config() -> Dict[str, Any]:
    """Get default configuration."""
    return {
        "limits": {
            "exact_search": 30,
            "hamiltonian": 20
        },
        "numeric": {
            "eigen_residual": 1e-9,
            "root_residual": 1e-12,
            "multiplicity_tolerance": 1e-8,
            "newton_iterations": 50,
            "float_digits": 15
        },
        "verify": {
            "workers": 1,
            "progress": False,
            "seed": 2024,
            "samples": 50
        },
        "logging": {
            "level": "INFO",
            "json": False
        }
    }


def apply_environment(config: Dict[str, Any]) -> Dict[str, Any]:
    """Apply environment overrides (COALESCE_LIMIT) to the configuration."""
    raw = os.environ.get(ENV_LIMIT)
    if raw is None or not raw.strip():
        return config
    try:
        limit = int(raw)
    except ValueError:
        raise ConfigError(f"{ENV_LIMIT} must be an integer, got {raw!r}", {ENV_LIMIT: raw}) from None
    config.setdefault("limits", {})["exact_search"] = limit
    return config


def validate_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Reject settings no computation can run with."""
    limits = config.get("limits", {})
    for name in ("exact_search", "hamiltonian"):
        if int(limits.get(name, 0)) < 0:
            raise ConfigError(f"limits.{name} must be non-negative", {name: limits.get(name)})

    numeric = config.get("numeric", {})
    for name in ("eigen_residual", "root_residual", "multiplicity_tolerance"):
        if float(numeric.get(name, 1)) <= 0:
            raise ConfigError(f"numeric.{name} must be positive", {name: numeric.get(name)})
    for name in ("newton_iterations", "float_digits"):
        if int(numeric.get(name, 1)) <= 0:
            raise ConfigError(f"numeric.{name} must be positive", {name: numeric.get(name)})

    verify = config.get("verify", {})
    if int(verify.get("workers", 1)) < 1:
        raise ConfigError("verify.workers must be at least 1", {"workers": verify.get("workers")})
    if int(verify.get("samples", 1)) < 0:
        raise ConfigError("verify.samples must be non-negative", {"samples": verify.get("samples")})
    return config
