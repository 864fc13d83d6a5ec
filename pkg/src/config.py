"""
Configuration management for tverberg-lab.
Uses Pydantic Settings; every field can be overridden by a TVERBERG_* variable.
"""
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import List


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    # Metadata
    app_name: str = "tverberg-lab"
    app_version: str = "1.0.0"
    schema_version: str = "tverberg-lab/1"

    # Enumeration limits
    unavoidable_cap: int = 14
    family_cap: int = 10_000_000
    jobs: int = 1

    # Theorem trials
    default_trials: int = 100
    default_seed: int = 0
    coord_range: int = 100

    # Elapsed times make reports differ between runs, so they are opt-in.
    report_timing: bool = False

    # Input files
    allowed_file_extensions: List[str] = [".json", ".yaml", ".yml"]

    # Observability Configuration
    log_level: str = "INFO"
    log_format: str = "json"  # "json" or "text"
    enable_metrics: bool = True

    model_config = SettingsConfigDict(
        env_prefix="TVERBERG_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False
    )


# Global settings instance
settings = Settings()
