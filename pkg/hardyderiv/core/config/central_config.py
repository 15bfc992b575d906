"""
Central Configuration Module

Provides centralized configuration management with environment variable support,
validation, and type conversion for the numerical toolkit.
"""

import os
from typing import Any, Callable, Dict, List, Optional, Type
from dataclasses import dataclass
from pathlib import Path

import yaml
from dotenv import load_dotenv


ENV_PREFIX = "HARDYDERIV_"


def _is_power_of_two(value: int) -> bool:
    return value > 0 and (value & (value - 1)) == 0


@dataclass
class ConfigSpec:
    """Configuration specification for validation and type conversion."""
    key: str
    default: Any
    required: bool = False
    data_type: Type = str
    description: str = ""
    validator: Optional[Callable[[Any], bool]] = None
    env_var: Optional[str] = None


class CentralConfig:
    """
    Central configuration manager with environment variable support.

    Handles loading from .env files and YAML configs, and provides
    typed access to configuration values with validation. Problems found
    while loading are collected in ``errors`` rather than printed, so the
    caller decides how to report them.
    """

    def __init__(self, env_file: str = ".env", config_dir: Optional[str] = None):
        """
        Initialize the central configuration.

        Args:
            env_file: Name of the environment file searched from the working directory upwards
            config_dir: Directory containing ``hardyderiv.yaml`` (optional)
        """
        self.env_file = env_file
        self.config_dir = Path(config_dir) if config_dir else None
        self.config_data: Dict[str, Any] = {}
        self.env_vars: Dict[str, str] = {}
        self.env_file_path: Optional[Path] = None
        self.errors: List[str] = []

        self.config_specs: Dict[str, ConfigSpec] = {}

        self._load_env_vars()
        self._register_default_specs()

    def _load_env_vars(self) -> None:
        """Load environment variables from the nearest .env file and the process."""
        current_dir = Path.cwd()

        for directory in [current_dir, *current_dir.parents]:
            env_path = directory / self.env_file
            if env_path.is_file():
                load_dotenv(env_path)
                self.env_file_path = env_path
                break

        self.env_vars = dict(os.environ)

    def _register_default_specs(self) -> None:
        """Register default configuration specifications."""
        # Numerics
        self.register_config_spec(ConfigSpec(
            key="numerics.grid_size",
            default=4096,
            data_type=int,
            description="Boundary grid size M used for sup norms and branch tracking (power of two)",
            env_var=f"{ENV_PREFIX}GRID_SIZE",
            validator=_is_power_of_two
        ))

        self.register_config_spec(ConfigSpec(
            key="numerics.degree_cap",
            default=4096,
            data_type=int,
            description="Largest polynomial degree produced by products",
            env_var=f"{ENV_PREFIX}DEGREE_CAP",
            validator=lambda x: x > 0
        ))

        self.register_config_spec(ConfigSpec(
            key="numerics.l1_rel_tol",
            default=1e-10,
            data_type=float,
            description="Relative agreement required between successive grids of the L1 quadrature",
            env_var=f"{ENV_PREFIX}L1_REL_TOL",
            validator=lambda x: 0.0 < x < 1.0
        ))

        self.register_config_spec(ConfigSpec(
            key="numerics.l1_max_grid",
            default=2 ** 22,
            data_type=int,
            description="Largest grid used by the L1 quadrature refinement",
            env_var=f"{ENV_PREFIX}L1_MAX_GRID",
            validator=_is_power_of_two
        ))

        self.register_config_spec(ConfigSpec(
            key="numerics.sup_inflation",
            default=1e-6,
            data_type=float,
            description="Safety inflation applied to grid sup norms on the right of inequalities",
            env_var=f"{ENV_PREFIX}SUP_INFLATION",
            validator=lambda x: x >= 0.0
        ))

        # Hardy analysis
        self.register_config_spec(ConfigSpec(
            key="hardy.split_delta",
            default=1e-3,
            data_type=float,
            description="Inflation of the sup norm when choosing the splitting constant c",
            env_var=f"{ENV_PREFIX}SPLIT_DELTA",
            validator=lambda x: x > 0.0
        ))

        self.register_config_spec(ConfigSpec(
            key="hardy.zero_threshold",
            default=1e-10,
            data_type=float,
            description="Smallest admissible |p| on the circle and at the origin for analytic logarithms",
            env_var=f"{ENV_PREFIX}ZERO_THRESHOLD",
            validator=lambda x: x > 0.0
        ))

        self.register_config_spec(ConfigSpec(
            key="hardy.reconstruction_tol",
            default=1e-8,
            data_type=float,
            description="Relative L2 reconstruction residual tolerated by the square decomposition",
            env_var=f"{ENV_PREFIX}RECONSTRUCTION_TOL",
            validator=lambda x: x > 0.0
        ))

        # Derivations
        self.register_config_spec(ConfigSpec(
            key="derivation.exp_terms",
            default=40,
            data_type=int,
            description="Number of terms of the truncated exponential series",
            env_var=f"{ENV_PREFIX}EXP_TERMS",
            validator=lambda x: x >= 1
        ))

        self.register_config_spec(ConfigSpec(
            key="derivation.exp_max_sup",
            default=2.0,
            data_type=float,
            description="Largest sup norm of the exponent accepted by the exponential check",
            env_var=f"{ENV_PREFIX}EXP_MAX_SUP",
            validator=lambda x: x > 0.0
        ))

        # Sampling
        self.register_config_spec(ConfigSpec(
            key="sampling.seed",
            default=0,
            data_type=int,
            description="Default seed for random polynomials and symbols",
            env_var=f"{ENV_PREFIX}SEED",
            validator=lambda x: x >= 0
        ))

        self.register_config_spec(ConfigSpec(
            key="sampling.samples",
            default=500,
            data_type=int,
            description="Default number of sampled (f, g) pairs",
            env_var=f"{ENV_PREFIX}SAMPLES",
            validator=lambda x: x >= 1
        ))

        self.register_config_spec(ConfigSpec(
            key="sampling.degree",
            default=12,
            data_type=int,
            description="Default degree of sampled polynomials",
            env_var=f"{ENV_PREFIX}SAMPLE_DEGREE",
            validator=lambda x: x >= 0
        ))

        self.register_config_spec(ConfigSpec(
            key="sampling.symbol_decay",
            default=0.5,
            data_type=float,
            description="Geometric damping ratio of random symbol coefficients",
            env_var=f"{ENV_PREFIX}SYMBOL_DECAY",
            validator=lambda x: 0.0 < x <= 1.0
        ))

        # BMOA estimators
        self.register_config_spec(ConfigSpec(
            key="bmoa.osc_depth",
            default=8,
            data_type=int,
            description="Deepest dyadic generation of arcs for the oscillation estimator",
            env_var=f"{ENV_PREFIX}OSC_DEPTH",
            validator=lambda x: x >= 1
        ))

        self.register_config_spec(ConfigSpec(
            key="bmoa.dual_family_size",
            default=32,
            data_type=int,
            description="Number of smoothed random test symbols for the duality estimator",
            env_var=f"{ENV_PREFIX}DUAL_FAMILY_SIZE",
            validator=lambda x: x >= 1
        ))

        self.register_config_spec(ConfigSpec(
            key="bmoa.carleson_random_family",
            default=16,
            data_type=int,
            description="Number of random test functions added to the Carleson family",
            env_var=f"{ENV_PREFIX}CARLESON_RANDOM_FAMILY",
            validator=lambda x: x >= 0
        ))

        # Check runner
        self.register_config_spec(ConfigSpec(
            key="runner.max_concurrent_checks",
            default=4,
            data_type=int,
            description="Maximum property checks evaluated concurrently",
            env_var=f"{ENV_PREFIX}MAX_CONCURRENT_CHECKS",
            validator=lambda x: x > 0
        ))

        # Logging
        self.register_config_spec(ConfigSpec(
            key="logging.level",
            default="WARNING",
            data_type=str,
            description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
            env_var=f"{ENV_PREFIX}LOG_LEVEL",
            validator=lambda x: x.upper() in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.enable_console",
            default=True,
            data_type=bool,
            description="Enable console logging on stderr",
            env_var=f"{ENV_PREFIX}LOG_ENABLE_CONSOLE"
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.enable_file",
            default=False,
            data_type=bool,
            description="Enable file logging",
            env_var=f"{ENV_PREFIX}LOG_ENABLE_FILE"
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.enable_structured",
            default=False,
            data_type=bool,
            description="Enable structured JSON logging",
            env_var=f"{ENV_PREFIX}LOG_ENABLE_STRUCTURED"
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.file_path",
            default="./logs/hardyderiv.log",
            data_type=str,
            description="Path to log file",
            env_var=f"{ENV_PREFIX}LOG_FILE_PATH"
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.structured_file_path",
            default="./logs/hardyderiv-structured.log",
            data_type=str,
            description="Path to structured log file",
            env_var=f"{ENV_PREFIX}LOG_STRUCTURED_FILE_PATH"
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.max_file_size",
            default=10 * 1024 * 1024,  # 10MB
            data_type=int,
            description="Maximum log file size in bytes",
            env_var=f"{ENV_PREFIX}LOG_MAX_FILE_SIZE",
            validator=lambda x: x > 0
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.backup_count",
            default=5,
            data_type=int,
            description="Number of backup log files to keep",
            env_var=f"{ENV_PREFIX}LOG_BACKUP_COUNT",
            validator=lambda x: x >= 0
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.include_location",
            default=False,
            data_type=bool,
            description="Include file location in log messages",
            env_var=f"{ENV_PREFIX}LOG_INCLUDE_LOCATION"
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.include_context",
            default=True,
            data_type=bool,
            description="Include context in log messages",
            env_var=f"{ENV_PREFIX}LOG_INCLUDE_CONTEXT"
        ))

        self.register_config_spec(ConfigSpec(
            key="logging.colored_console",
            default=False,
            data_type=bool,
            description="Use colored output in console",
            env_var=f"{ENV_PREFIX}LOG_COLORED_CONSOLE"
        ))

    def register_config_spec(self, spec: ConfigSpec) -> None:
        """
        Register a configuration specification.

        Args:
            spec: Configuration specification to register
        """
        self.config_specs[spec.key] = spec

    def load_config(self, config_file: Optional[str] = None) -> bool:
        """
        Load configuration from files and environment variables.

        Args:
            config_file: Path to a YAML file; when omitted ``hardyderiv.yaml``
                in ``config_dir`` is used if present

        Returns:
            True if loading and validation succeeded, False otherwise
        """
        try:
            if config_file is not None:
                file_path = Path(config_file)
                if not file_path.is_file():
                    self.errors.append(f"Configuration file not found: {config_file}")
                    return False
                self._load_yaml_file(file_path)
            elif self.config_dir is not None:
                file_path = self.config_dir / "hardyderiv.yaml"
                if file_path.exists():
                    self._load_yaml_file(file_path)

            self._apply_env_overrides()

            return self._validate_config()

        except (OSError, yaml.YAMLError) as e:
            self.errors.append(f"Error loading configuration: {e}")
            return False

    def _load_yaml_file(self, file_path: Path) -> None:
        """
        Load configuration from a YAML file.

        Args:
            file_path: Path to YAML file
        """
        with open(file_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
            if data:
                if not isinstance(data, dict):
                    raise yaml.YAMLError(f"{file_path} must contain a mapping")
                self._merge_config(data)

    def _merge_config(self, new_data: Dict[str, Any]) -> None:
        """
        Merge new configuration data with existing data.

        Args:
            new_data: New configuration data to merge
        """
        def merge_dicts(target: Dict[str, Any], source: Dict[str, Any]) -> None:
            for key, value in source.items():
                if key in target and isinstance(target[key], dict) and isinstance(value, dict):
                    merge_dicts(target[key], value)
                else:
                    target[key] = value

        merge_dicts(self.config_data, new_data)

    def _apply_env_overrides(self) -> None:
        """Apply environment variable overrides to configuration."""
        for spec in self.config_specs.values():
            if spec.env_var and spec.env_var in self.env_vars:
                env_value = self.env_vars[spec.env_var]

                try:
                    if spec.data_type == bool:
                        converted_value = env_value.lower() in ('true', '1', 'yes', 'on')
                    elif spec.data_type == int:
                        converted_value = int(env_value)
                    elif spec.data_type == float:
                        converted_value = float(env_value)
                    else:
                        converted_value = env_value

                    self._set_nested_value(spec.key, converted_value)

                except (ValueError, TypeError) as e:
                    self.errors.append(f"Error converting environment variable {spec.env_var}: {e}")

    def _set_nested_value(self, key: str, value: Any) -> None:
        """
        Set a nested configuration value using dot notation.

        Args:
            key: Dot-separated key (e.g., 'numerics.grid_size')
            value: Value to set
        """
        keys = key.split('.')
        config = self.config_data

        for k in keys[:-1]:
            if k not in config or not isinstance(config[k], dict):
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def _validate_config(self) -> bool:
        """
        Validate configuration against registered specifications.

        Returns:
            True if validation passes, False otherwise
        """
        errors = []

        for spec in self.config_specs.values():
            value = self.get(spec.key)

            if spec.required and (value is None or value == ""):
                errors.append(f"Required configuration missing: {spec.key}")
                continue

            if not spec.required and (value is None or value == ""):
                continue

            if value is not None and not isinstance(value, spec.data_type):
                try:
                    if spec.data_type == bool:
                        value = str(value).lower() in ('true', '1', 'yes', 'on')
                    elif spec.data_type == int and isinstance(value, float) and not value.is_integer():
                        raise ValueError(value)
                    else:
                        value = spec.data_type(value)
                    self._set_nested_value(spec.key, value)
                except (ValueError, TypeError):
                    errors.append(f"Invalid type for {spec.key}: expected {spec.data_type.__name__}")
                    continue

            if spec.validator and value is not None:
                try:
                    if not spec.validator(value):
                        errors.append(f"Validation failed for {spec.key}: {value}")
                except Exception as e:
                    errors.append(f"Validator error for {spec.key}: {e}")

        self.errors.extend(errors)
        return not errors

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value by key (supports dot notation).

        Args:
            key: Configuration key (e.g., 'numerics.grid_size')
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        if key in self.config_specs:
            spec = self.config_specs[key]
            default = spec.default if default is None else default

        keys = key.split('.')
        value = self.config_data

        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
                if value is None:
                    return default
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value by key (supports dot notation).

        Args:
            key: Configuration key (e.g., 'sampling.seed')
            value: Value to set
        """
        self._set_nested_value(key, value)

    def get_section(self, section_name: str) -> Dict[str, Any]:
        """
        Get an entire configuration section with defaults filled in.

        Args:
            section_name: Name of the configuration section

        Returns:
            Dictionary containing section data
        """
        prefix = f"{section_name}."
        return {
            key[len(prefix):]: self.get(key)
            for key in self.config_specs
            if key.startswith(prefix)
        }

    def get_numerics_config(self) -> Dict[str, Any]:
        """Get boundary grid and quadrature settings."""
        return self.get_section("numerics")

    def get_logging_config(self) -> Dict[str, Any]:
        """
        Get logging configuration as a dictionary.

        Returns:
            Dictionary containing logging configuration
        """
        return self.get_section("logging")

    def get_config_summary(self) -> Dict[str, Any]:
        """
        Get a summary of current configuration.

        Returns:
            Dictionary containing configuration summary
        """
        sections = sorted({key.split('.')[0] for key in self.config_specs})
        return {section: self.get_section(section) for section in sections}


# Global configuration instance
_central_config: Optional[CentralConfig] = None


def get_config() -> CentralConfig:
    """
    Get the global configuration instance.

    Returns:
        CentralConfig instance
    """
    global _central_config
    if _central_config is None:
        _central_config = CentralConfig()
        _central_config.load_config()
    return _central_config


def reload_config(config_file: Optional[str] = None) -> CentralConfig:
    """
    Reload the global configuration.

    Args:
        config_file: Optional YAML file applied on top of the defaults

    Returns:
        Reloaded CentralConfig instance
    """
    global _central_config
    _central_config = CentralConfig()
    _central_config.load_config(config_file)
    return _central_config
