"""
BOHRKIT Configuration Management

Handles loading, saving, and managing tool defaults.
Uses JSON format for human-readable configuration files.
"""

import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional

from .errors import ConfigurationError


OUTPUT_DIR_ENV = "BOHRKIT_OUTPUT_DIR"


@dataclass
class GeneralConfig:
    """General application configuration."""
    data_dir: str = "~/.bohrkit"
    output_dir: str = ""
    log_level: str = "WARNING"
    log_to_file: bool = False
    color_output: bool = True


@dataclass
class NumericsConfig:
    """Root-finding, minimisation and operator-norm settings."""
    tol: float = 1e-12
    grid_points: int = 4096
    theta_grid: int = 512


@dataclass
class SeriesConfig:
    """Truncation and boundary sampling for generated test functions."""
    degree: int = 64
    boundary_grid: int = 2048


@dataclass
class VerifyConfig:
    """Slack and grid sizes for verification sweeps."""
    slack_closed: float = 1e-9
    slack_random: float = 1e-7
    r_grid: int = 16
    t_grid: int = 256


@dataclass
class SweepConfig:
    """Sampling defaults for randomized families."""
    samples: int = 200
    seed: int = 0
    dim: int = 2
    workers: int = 1


SECTIONS = {
    "general": GeneralConfig,
    "numerics": NumericsConfig,
    "series": SeriesConfig,
    "verify": VerifyConfig,
    "sweep": SweepConfig,
}


class Config:
    """
    Main configuration class for BOHRKIT.

    Manages all configuration settings with defaults and persistence.
    """

    DEFAULT_CONFIG_FILENAME = "config.json"

    def __init__(self):
        self.general = GeneralConfig()
        self.numerics = NumericsConfig()
        self.series = SeriesConfig()
        self.verify = VerifyConfig()
        self.sweep = SweepConfig()
        self._config_path: Optional[Path] = None

    @property
    def data_dir(self) -> Path:
        """Get the expanded data directory path."""
        return Path(os.path.expanduser(self.general.data_dir))

    @property
    def log_dir(self) -> Path:
        """Get the log directory path."""
        return self.data_dir / "logs"

    @property
    def config_path(self) -> Path:
        """Path the configuration is read from and saved to."""
        return self._config_path or (self.data_dir / self.DEFAULT_CONFIG_FILENAME)

    @property
    def output_dir(self) -> Path:
        """
        Directory for report files.

        Resolution order: $BOHRKIT_OUTPUT_DIR, general.output_dir, cwd.
        """
        env_dir = os.environ.get(OUTPUT_DIR_ENV)
        if env_dir:
            return Path(os.path.expanduser(env_dir))
        if self.general.output_dir:
            return Path(os.path.expanduser(self.general.output_dir))
        return Path.cwd()

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary."""
        return {name: asdict(getattr(self, name)) for name in SECTIONS}

    def from_dict(self, data: Dict[str, Any]) -> None:
        """Load configuration from dictionary, ignoring unknown keys."""
        for name in SECTIONS:
            section = getattr(self, name)
            for key, value in data.get(name, {}).items():
                if hasattr(section, key):
                    setattr(section, key, value)

    def save(self, path: Optional[Path] = None) -> None:
        """Save configuration to file."""
        save_path = Path(path) if path else self.config_path

        try:
            save_path.parent.mkdir(parents=True, exist_ok=True)
            with open(save_path, 'w', encoding='utf-8') as f:
                json.dump(self.to_dict(), f, indent=2)
            self._config_path = save_path
        except (IOError, OSError) as e:
            raise ConfigurationError(f"Failed to save configuration: {e}")

    @classmethod
    def load(cls, path: Optional[str] = None) -> 'Config':
        """
        Load configuration from file.

        Returns the defaults when no config file exists; unlike a save,
        loading never creates files.
        """
        config = cls()
        config_path = Path(path) if path else config.data_dir / cls.DEFAULT_CONFIG_FILENAME

        if config_path.exists():
            try:
                with open(config_path, 'r', encoding='utf-8') as f:
                    data = json.load(f)
            except json.JSONDecodeError as e:
                raise ConfigurationError(f"Invalid JSON in config file: {e}")
            except (IOError, OSError) as e:
                raise ConfigurationError(f"Failed to read config file: {e}")
            if not isinstance(data, dict):
                raise ConfigurationError("Configuration must be a JSON object")
            config.from_dict(data)

        config._config_path = config_path
        return config

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value using dot notation.

        Example: config.get("numerics.tol")
        """
        obj: Any = self
        try:
            for part in key.split("."):
                obj = getattr(obj, part)
            return obj
        except AttributeError:
            return default

    def get_default(self, key: str) -> Any:
        """Default value of a dotted key, or None when unknown."""
        parts = key.split(".")
        if len(parts) != 2 or parts[0] not in SECTIONS:
            return None
        return getattr(SECTIONS[parts[0]](), parts[1], None)

    def set(self, key: str, value: Any) -> None:
        """
        Set configuration value using dot notation.

        The value is coerced to the type of the field's default.

        Example: config.set("verify.t_grid", 512)
        """
        parts = key.split(".")
        if len(parts) != 2:
            raise ConfigurationError(f"Invalid key format: {key}")

        section_name, attr_name = parts
        if section_name not in SECTIONS:
            raise ConfigurationError(f"Unknown configuration section: {section_name}")

        section = getattr(self, section_name)
        known = {f.name: f for f in fields(section)}
        if attr_name not in known:
            raise ConfigurationError(f"Unknown configuration key: {attr_name}")

        target_type = type(getattr(SECTIONS[section_name](), attr_name))
        try:
            if target_type is bool and isinstance(value, str):
                value = value.lower() in ('true', 'yes', 'on', '1')
            else:
                value = target_type(value)
        except (TypeError, ValueError):
            raise ConfigurationError(f"Value for {key} must be {target_type.__name__}: {value!r}")

        setattr(section, attr_name, value)

    def reset(self) -> None:
        """Reset configuration to defaults."""
        for name, section_cls in SECTIONS.items():
            setattr(self, name, section_cls())
