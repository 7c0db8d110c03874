"""
Application configuration using Pydantic settings
"""

import os
from functools import lru_cache
from pathlib import Path

from pydantic import field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

SUPPORTED_T_MIN = 3
SUPPORTED_T_MAX = 8


def default_cache_dir() -> Path:
    """Platform cache location: $XDG_CACHE_HOME/grasschar or ~/.cache/grasschar"""
    base = os.environ.get("XDG_CACHE_HOME")
    root = Path(base) if base else Path.home() / ".cache"
    return root / "grasschar"


class Settings(BaseSettings):
    """Application settings"""

    model_config = SettingsConfigDict(
        env_prefix="GRASSCHAR_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "json"

    # Groebner basis cache
    CACHE_DIR: Path = default_cache_dir()
    CACHE_ENABLED: bool = True
    VERIFY_CACHE: bool = False

    # Verifier
    VERIFY_WORKERS: int = 1
    T_MIN: int = 3
    T_MAX: int = 5

    @field_validator("CACHE_DIR", mode="before")
    @classmethod
    def expand_cache_dir(cls, v):
        return Path(v).expanduser()

    @field_validator("LOG_FORMAT")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        if v not in ("json", "console"):
            raise ValueError("LOG_FORMAT must be 'json' or 'console'")
        return v

    @field_validator("VERIFY_WORKERS")
    @classmethod
    def validate_workers(cls, v: int) -> int:
        if v < 1:
            raise ValueError("VERIFY_WORKERS must be at least 1")
        return v

    @model_validator(mode="after")
    def validate_t_range(self) -> "Settings":
        if not SUPPORTED_T_MIN <= self.T_MIN <= self.T_MAX <= SUPPORTED_T_MAX:
            raise ValueError(
                f"t range must satisfy {SUPPORTED_T_MIN} <= T_MIN <= T_MAX <= {SUPPORTED_T_MAX}"
            )
        return self


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
