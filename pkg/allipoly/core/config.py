"""
Application configuration settings.

This module defines the configuration for allipoly: brute-force guards for the
exponential enumerations, parallelism defaults and logging. Values come from
environment variables prefixed with ``ALLIPOLY_`` or from a ``.env`` file.
"""

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings


class GuardConfig(BaseModel):
    """Order and size guards for the exponential algorithms."""

    brute_force_max_order: int = Field(..., description="Largest order accepted by subset enumeration without override")
    canonical_max_order: int = Field(..., description="Largest order accepted by canonical labeling without override")
    enumeration_max_order: int = Field(..., description="Largest order for isomorphism-free enumeration")
    census_max_order: int = Field(..., description="Largest census order without override")
    census_force_max_order: int = Field(..., description="Largest census order reachable with override")
    comparison_max_order: int = Field(..., description="Largest order for the comparison polynomial oracles")
    tutte_max_edges: int = Field(..., description="Largest edge count for deletion-contraction")


class ParallelConfig(BaseModel):
    """Parallel work partitioning settings."""

    default_threads: int = Field(..., ge=1, description="Default number of work partitions / worker processes")


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Brute-force guards
    brute_force_max_order: int = Field(default=26, description="Alliance polynomial enumeration guard (O(m*2^n))")
    canonical_max_order: int = Field(default=8, description="Canonical form guard (factorial time)")
    enumeration_max_order: int = Field(default=7, description="Non-isomorphic enumeration guard")
    census_max_order: int = Field(default=7, description="Census ceiling without --force")
    census_force_max_order: int = Field(default=8, description="Census ceiling with --force")
    comparison_max_order: int = Field(default=16, description="Matching/independence/domination/characteristic guard")
    tutte_max_edges: int = Field(default=16, description="Tutte deletion-contraction edge guard")

    # Parallelism
    default_threads: int = Field(default=1, ge=1, description="Default work partitions")

    # Logging
    log_level: str = Field(default="INFO", description="Root log level for entry points")

    model_config = {
        "env_prefix": "ALLIPOLY_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore",
    }

    @property
    def guard_config(self) -> GuardConfig:
        """Get guard configuration."""
        return GuardConfig(
            brute_force_max_order=self.brute_force_max_order,
            canonical_max_order=self.canonical_max_order,
            enumeration_max_order=self.enumeration_max_order,
            census_max_order=self.census_max_order,
            census_force_max_order=self.census_force_max_order,
            comparison_max_order=self.comparison_max_order,
            tutte_max_edges=self.tutte_max_edges,
        )

    @property
    def parallel_config(self) -> ParallelConfig:
        """Get parallelism configuration."""
        return ParallelConfig(default_threads=self.default_threads)


def get_settings() -> Settings:
    """Build a fresh Settings instance from the current environment."""
    return Settings()


# Global settings instance
settings = get_settings()


# Export commonly used configurations
guard_config = settings.guard_config
parallel_config = settings.parallel_config
