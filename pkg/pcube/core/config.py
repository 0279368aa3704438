"""
Configuration settings for the pcube toolkit.
"""

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings; built from keyword arguments only."""

    model_config = SettingsConfigDict(
        case_sensitive=False,
        extra="ignore",
    )

    # Application settings
    app_name: str = Field(default="pcube", description="Application name")
    version: str = Field(default="0.1.0", description="Application version")
    schema_version: str = Field(
        default="1.0",
        description="Version stamped into every JSON document the CLI writes",
    )

    # Traverse search settings
    traverse_limit: int = Field(
        default=16,
        ge=1,
        description="Default maximum number of traverses returned per search",
    )
    traverse_search_budget: int = Field(
        default=200_000,
        ge=1,
        description="Maximum DFS expansions per traverse search",
    )

    # Census settings
    census_workers: int = Field(
        default=1,
        ge=1,
        description="Worker processes for census runs (1 runs in-process)",
    )
    census_chunk_size: int = Field(
        default=8,
        ge=1,
        description="Input lines handed to a worker at a time",
    )
    max_theta_pairs: int = Field(
        default=400,
        ge=0,
        description="Θ-related edge pairs checked per graph by the traverse checks",
    )
    geodesic_samples: int = Field(
        default=16,
        ge=0,
        description="Geodesics sampled per graph for the paste-cycle checks",
    )
    sample_seed: int = Field(
        default=0,
        description="Seed mixed with the graph6 string for geodesic sampling",
    )
    oracle_max_n: int = Field(
        default=9,
        ge=0,
        description="Largest vertex count cross-checked by brute-force embedding",
    )
    canonical_max_n: int = Field(
        default=16,
        ge=1,
        description="Largest vertex count accepted by canonical_key",
    )
    qd_expansion_budget: int = Field(
        default=5_000_000,
        ge=1,
        description="Maximum isometric-expansion covers tried by the Q_d enumerator",
    )
    show_progress: bool = Field(
        default=False,
        description="Show a progress bar on stderr during census runs",
    )

    # Logging settings
    log_level: str = Field(
        default="WARNING",
        description="Logging level",
    )
    log_format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Logging format",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # Output must not depend on the process environment.
        return (init_settings,)


# Global settings instance
settings = Settings()
