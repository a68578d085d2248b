"""
Pydantic models for configuration validation.
Defines the structure and validation rules for the YAML configuration file.
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class SettingsConfig(BaseModel):
    """Global settings for execution and logging."""
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    parallel_execution: bool = False
    max_workers: int = 4

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v):
        valid_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v.upper()

    @field_validator('max_workers')
    @classmethod
    def validate_max_workers(cls, v):
        if v < 1:
            raise ValueError("max_workers must be at least 1")
        return v


class ConstructionConfig(BaseModel):
    """Limits and checks of the doubling construction."""
    max_dimension: int = Field(16, description="Largest cube dimension construct() accepts")
    merge_check: bool = Field(True, description="Rebuild each new union by cycle merging and compare")

    @field_validator('max_dimension')
    @classmethod
    def validate_max_dimension(cls, v):
        if v < 2:
            raise ValueError("max_dimension must be at least 2")
        return v


class SearchConfig(BaseModel):
    """Budgets and defaults of the rotation-system searches."""
    exhaustive_budget: int = 10_000_000
    random_budget: int = 100_000
    default_seed: int = 1
    progress_interval: int = 10_000

    @field_validator('exhaustive_budget', 'random_budget', 'progress_interval')
    @classmethod
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError("budgets and intervals must be at least 1")
        return v

    @field_validator('default_seed')
    @classmethod
    def validate_seed(cls, v):
        if not 0 <= v < 2 ** 64:
            raise ValueError("default_seed must be an unsigned 64-bit value")
        return v


class FrameworkConfig(BaseModel):
    """Root configuration model."""
    settings: SettingsConfig = Field(default_factory=SettingsConfig)
    construction: ConstructionConfig = Field(default_factory=ConstructionConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)

    model_config = ConfigDict(extra='allow')
