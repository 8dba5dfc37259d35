"""Configuration models for reprometer.

Settings come from an optional YAML file validated with pydantic. The models
use extra="ignore" so config files written for newer versions still load.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from reprometer import defaults
from reprometer.errors import ConfigError, ErrorCode

logger = logging.getLogger(__name__)


class AssessmentDefaults(BaseModel):
    """Assessment defaults."""

    model_config = ConfigDict(extra="ignore")

    mode: Literal["one", "two"] = defaults.DEFAULT_MODE
    ci_level: float = defaults.DEFAULT_CI_LEVEL
    target_precision: Optional[float] = None

    @field_validator("ci_level")
    @classmethod
    def _level_in_unit_interval(cls, value: float) -> float:
        if not 0.0 < value < 1.0:
            raise ValueError("ci_level must lie strictly between 0 and 1")
        return value


class ReportSettings(BaseModel):
    """Report rendering settings."""

    model_config = ConfigDict(extra="ignore")

    format: Literal["text", "json"] = defaults.DEFAULT_FORMAT
    cv_star_decimals: int = Field(default=defaults.CV_STAR_DECIMALS, ge=0)
    ci_decimals: int = Field(default=defaults.CI_DECIMALS, ge=0)
    percent_decimals: int = Field(default=defaults.PERCENT_DECIMALS, ge=0)
    max_value_decimals: int = Field(default=defaults.MAX_VALUE_DECIMALS, ge=0)
    extra_value_decimals: int = Field(default=defaults.EXTRA_VALUE_DECIMALS, ge=0)


class LoggingSettings(BaseModel):
    """Logging settings."""

    model_config = ConfigDict(extra="ignore")

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"


class ReprometerConfig(BaseModel):
    """Top-level configuration model."""

    model_config = ConfigDict(extra="ignore")

    assessment: AssessmentDefaults = Field(default_factory=AssessmentDefaults)
    report: ReportSettings = Field(default_factory=ReportSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


def load_config(path: str | Path | None = None) -> ReprometerConfig:
    """Load configuration from a YAML file.

    Args:
        path: Config file path. ``None`` returns the defaults.

    Returns:
        Validated configuration.

    Raises:
        ConfigError: If the file cannot be read or does not validate.
    """
    if path is None:
        return ReprometerConfig()

    config_path = Path(path)
    try:
        raw = yaml.safe_load(config_path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(ErrorCode.BAD_CONFIG, f"cannot read {config_path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(ErrorCode.BAD_CONFIG, f"invalid YAML in {config_path}: {e}") from e

    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigError(ErrorCode.BAD_CONFIG, f"{config_path} must contain a mapping")

    try:
        config = ReprometerConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(ErrorCode.BAD_CONFIG, f"invalid config {config_path}: {e}") from e

    logger.info("Loaded config from %s", config_path)
    return config
