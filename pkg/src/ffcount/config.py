"""Configuration management for ffcount."""

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, ValidationError

from ffcount.errors import ConfigError

BUDGET_ENV_VAR = "FFCOUNT_BUDGET"

DEFAULT_BRUTE_FORCE_BUDGET = 10**8
DEFAULT_GAUSSVEC_BUDGET = 10**7


class BudgetSettings(BaseModel):
    """Enumeration budgets, counted in points or solution vectors."""

    brute_force: int = Field(default=DEFAULT_BRUTE_FORCE_BUDGET, gt=0)
    gaussvec: int = Field(default=DEFAULT_GAUSSVEC_BUDGET, gt=0)


class ToleranceSettings(BaseModel):
    """Numeric tolerances for the floating-point counting paths."""

    residual: float = Field(default=1e-3, gt=0)  # scaled by sqrt(summands)
    character: float = Field(default=1e-10, gt=0)
    sum: float = Field(default=1e-6, gt=0)


class ParserSettings(BaseModel):
    """Polynomial parser limits."""

    exponent_cap: int = Field(default=10**6, gt=0)
    variable_cap: int = Field(default=1024, gt=0)


class RunLogSettings(BaseModel):
    """Run history logging."""

    enabled: bool = True


class Settings(BaseModel):
    """Top-level settings stored in config.json."""

    budgets: BudgetSettings = Field(default_factory=BudgetSettings)
    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)
    parser: ParserSettings = Field(default_factory=ParserSettings)
    run_log: RunLogSettings = Field(default_factory=RunLogSettings)
    workers: int = Field(default=1, ge=1)


def env_budget() -> Optional[int]:
    """Read the FFCOUNT_BUDGET override, if set.

    Raises:
        ConfigError: If the variable is not a positive integer
    """
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        raise ConfigError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
    if value <= 0:
        raise ConfigError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
    return value


def resolve_budget(kind: str, explicit: Optional[int] = None) -> int:
    """Resolve an enumeration budget.

    Priority: explicit argument, then FFCOUNT_BUDGET, then the built-in default.

    Args:
        kind: "brute_force" or "gaussvec"
        explicit: Budget passed by the caller
    """
    if explicit is not None:
        return explicit
    override = env_budget()
    if override is not None:
        return override
    return getattr(BudgetSettings(), kind)


class Config:
    """Manages the ffcount configuration file."""

    def __init__(self) -> None:
        """Initialize configuration."""
        # Respects HOME so tests can isolate the config directory
        home = Path(os.environ.get("HOME", str(Path.home())))

        self.config_dir = home / ".ffcount"
        self.config_file = self.config_dir / "config.json"
        self.run_log = self.config_dir / "runs.jsonl"

        self._ensure_config_dir()
        self._data: Dict[str, Any] = self._load_config()
        try:
            self.settings = Settings.model_validate(self._data)
        except ValidationError as e:
            error = e.errors()[0]
            key = ".".join(str(part) for part in error["loc"])
            raise RuntimeError(
                f"Invalid configuration in {self.config_file}: {key}: {error['msg']}. "
                f"Fix the value or run 'ffcount config set {key} VALUE'."
            )

    def _ensure_config_dir(self) -> None:
        """Ensure configuration directory exists."""
        if self.config_dir.exists() and not self.config_dir.is_dir():
            raise RuntimeError(
                f"Configuration path {self.config_dir} exists but is not a directory. "
                f"Please remove or rename this file."
            )

        self.config_dir.mkdir(parents=True, exist_ok=True)

        if self.run_log.exists() and self.run_log.is_dir():
            raise RuntimeError(
                f"Run log path {self.run_log} is a directory. "
                f"Please remove this directory."
            )

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file, writing defaults on first use."""
        if not self.config_file.exists():
            default_config = Settings().model_dump()
            self._save_config(default_config)
            return default_config

        if self.config_file.is_dir():
            raise RuntimeError(
                f"Configuration file {self.config_file} is a directory. "
                f"Please remove this directory."
            )

        try:
            with open(self.config_file, 'r') as f:
                data = json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            raise RuntimeError(
                f"Failed to load configuration from {self.config_file}: {e}"
            )

        # Fill sections added after the file was written
        defaults = Settings().model_dump()
        for key, value in defaults.items():
            data.setdefault(key, value)
        return data

    def _save_config(self, data: Optional[Dict[str, Any]] = None) -> None:
        """Save configuration to file."""
        if data is None:
            data = self._data

        with open(self.config_file, 'w') as f:
            json.dump(data, f, indent=2)

    def get_budget(self, kind: str) -> int:
        """Effective budget: FFCOUNT_BUDGET wins over the file."""
        override = env_budget()
        if override is not None:
            return override
        return getattr(self.settings.budgets, kind)

    def get_workers(self) -> int:
        return self.settings.workers

    def get_tolerances(self) -> ToleranceSettings:
        return self.settings.tolerances

    def get_exponent_cap(self) -> int:
        return self.settings.parser.exponent_cap

    def get_variable_cap(self) -> int:
        return self.settings.parser.variable_cap

    def run_log_enabled(self) -> bool:
        return self.settings.run_log.enabled

    def set_value(self, key: str, raw_value: str) -> Any:
        """Set a dotted key (e.g. ``budgets.brute_force``) and save.

        The value is parsed as JSON when possible and validated against the
        settings models before anything is written.

        Returns:
            The stored value

        Raises:
            KeyError: If the key does not exist
            ValueError: If the value fails validation
        """
        try:
            value = json.loads(raw_value)
        except json.JSONDecodeError:
            value = raw_value

        data = json.loads(json.dumps(self._data))
        node = data
        parts = key.split(".")
        for part in parts[:-1]:
            if not isinstance(node.get(part), dict):
                raise KeyError(f"Unknown configuration key: {key}")
            node = node[part]
        if parts[-1] not in node:
            raise KeyError(f"Unknown configuration key: {key}")
        node[parts[-1]] = value

        try:
            settings = Settings.model_validate(data)
        except ValidationError as e:
            raise ValueError(f"Invalid value for {key}: {e.errors()[0]['msg']}")

        self._data = settings.model_dump()
        self.settings = settings
        self._save_config()

        stored: Any = self._data
        for part in parts:
            stored = stored[part]
        return stored
