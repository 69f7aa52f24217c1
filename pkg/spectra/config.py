"""
Configuration settings for the interval spectra toolkit.

This module contains all configuration settings and parameters used by the
enumeration, search and analysis algorithms. It provides a centralized place to
manage algorithm behavior; every field can be overridden through a `SPECTRA_*`
environment variable or a `.env` file.
"""

from functools import lru_cache
from typing import Any, Dict

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Factorial guard for exhaustive enumeration: 10! = 3,628,800 labelings.
DEFAULT_MAX_EDGES = 10


class SpectraSettings(BaseSettings):
    """Base settings for all algorithms"""

    model_config = SettingsConfigDict(
        env_prefix="SPECTRA_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    # Enumeration settings
    MAX_EDGES: int = Field(DEFAULT_MAX_EDGES, ge=1)
    VIOLATION_CAP: int = Field(100, ge=0)
    SHARDS: int = Field(1, ge=1)
    SHOW_PROGRESS: bool = False

    # Labeling settings
    MAX_LABEL: int = Field(10**9, ge=1)  # ceiling for general injective labelings
    DEFAULT_SEED: int = 0
    SAMPLES: int = Field(10_000, ge=1)

    # Gradient path settings
    GRADIENT_MAX_PATHS: int = Field(10_000, ge=1)

    # Local search settings
    SEARCH_BUDGET: int = Field(100_000, ge=1)
    SEARCH_RESTARTS: int = Field(5, ge=1)
    INITIAL_TEMPERATURE: float = Field(2.0, gt=0)
    TEMPERATURE_DECAY: float = Field(0.999, gt=0, le=1)

    # Output settings
    LOG_LEVEL: str = "WARNING"
    SCHEMA_VERSION: int = 1


@lru_cache(maxsize=1)
def get_settings() -> SpectraSettings:
    """Return the process-wide settings instance"""
    return SpectraSettings()


def get_algorithm_config(algorithm_name: str) -> Dict[str, Any]:
    """Get configuration for a specific algorithm"""
    settings = get_settings()
    configs = {
        "enumeration": {
            "max_edges": settings.MAX_EDGES,
            "violation_cap": settings.VIOLATION_CAP,
            "shards": settings.SHARDS,
            "show_progress": settings.SHOW_PROGRESS,
        },
        "sampling": {
            "samples": settings.SAMPLES,
            "seed": settings.DEFAULT_SEED,
            "violation_cap": settings.VIOLATION_CAP,
        },
        "search": {
            "budget": settings.SEARCH_BUDGET,
            "restarts": settings.SEARCH_RESTARTS,
            "seed": settings.DEFAULT_SEED,
            "initial_temperature": settings.INITIAL_TEMPERATURE,
            "decay": settings.TEMPERATURE_DECAY,
        },
        "gradient": {
            "max_count": settings.GRADIENT_MAX_PATHS,
        },
    }
    return configs.get(algorithm_name, {})
