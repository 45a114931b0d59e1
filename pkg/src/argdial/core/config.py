"""
Package configuration for argdial
"""

import os
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .exceptions import ConfigurationError, wrap_exception

SCHEME_PATH_ENV = "ARGDIAL_SCHEME_PATH"
LOG_LEVEL_ENV = "ARGDIAL_LOG_LEVEL"
STRUCTURED_LOGS_ENV = "ARGDIAL_STRUCTURED_LOGS"
MAX_DEPTH_ENV = "ARGDIAL_MAX_EMBEDDING_DEPTH"


class ArgdialConfig(BaseModel):
    """Configuration shared by the library and the command line"""

    model_config = ConfigDict(frozen=True)

    # Extra directories searched for *.scheme files
    scheme_path: tuple[Path, ...] = Field(default=())

    # Logging
    log_level: str = Field(default="WARNING")
    structured_logs: bool = Field(default=False)

    # Dialogue limits
    max_embedding_depth: int = Field(default=8, ge=1, le=64)
    default_max_turns: int = Field(default=200, ge=1)

    # Evaluation limits
    brute_force_node_cap: int = Field(default=20, ge=0, le=24)

    # CLI file processing
    parallel_workers: int = Field(default=4, ge=1, le=64)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @classmethod
    def from_env(cls, **overrides) -> "ArgdialConfig":
        """Build configuration from ARGDIAL_* environment variables"""
        values: dict = {}

        raw_path = os.getenv(SCHEME_PATH_ENV, "")
        if raw_path:
            values["scheme_path"] = tuple(Path(p) for p in raw_path.split(os.pathsep) if p)

        if level := os.getenv(LOG_LEVEL_ENV):
            values["log_level"] = level

        if structured := os.getenv(STRUCTURED_LOGS_ENV):
            values["structured_logs"] = structured.lower() in {"1", "true", "yes"}

        if depth := os.getenv(MAX_DEPTH_ENV):
            values["max_embedding_depth"] = depth

        values.update({k: v for k, v in overrides.items() if v is not None})

        try:
            return cls(**values)
        except ValidationError as e:
            raise wrap_exception(e, ConfigurationError, "Invalid argdial configuration") from e
