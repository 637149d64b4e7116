"""Runtime configuration."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Limits and defaults, overridable through PARABOSON_* environment variables."""

    model_config = SettingsConfigDict(env_prefix="PARABOSON_", env_file=".env", extra="ignore")

    degree_bound: int = Field(8, ge=0)  # largest weight-space degree that may be built
    young_subgroup_bound: int = Field(3628800, ge=1)  # 10!
    default_seed: int = 0
    log_level: str = "INFO"


@lru_cache
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()
