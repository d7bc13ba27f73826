from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Above this order labeled enumeration stops being a desk-scale job.
DEFAULT_ENUMERATION_CAP = 8


class Settings(BaseSettings):
    """Application settings, read from ``OHMCURVE_*`` variables and ``.env``."""

    model_config = SettingsConfigDict(
        env_prefix="OHMCURVE_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    project_name: str = Field(default="ohmcurve", description="Project name")

    # Enumeration
    cap: int = Field(
        default=DEFAULT_ENUMERATION_CAP,
        ge=1,
        le=9,
        description="Largest order accepted by labeled enumeration (2^(n(n-1)/2) bitmasks)",
    )
    screen_batch_size: int = Field(default=2048, ge=1, description="Graphs per float screening batch")
    jobs: int = Field(default=1, ge=1, description="Default worker count")

    # Numerics
    screen_tolerance: float = Field(
        default=1e-6, gt=0, description="Float distance to a decision boundary that forces an exact recheck"
    )
    singular_tolerance: float = Field(
        default=1e-12, gt=0, description="Relative pivot size below which a float system is singular"
    )

    # Monitoring
    prometheus_enabled: bool = Field(default=False, description="Enable Prometheus metrics")
    prometheus_port: int = Field(default=8001, description="Prometheus metrics port")

    # Logging
    log_level: str = Field(default="INFO", description="Log level")
    log_format: str = Field(default="text", description="Log format (json or text)")

    @field_validator("log_format")
    @classmethod
    def _check_log_format(cls, value: str) -> str:
        if value not in ("json", "text"):
            raise ValueError("log_format must be 'json' or 'text'")
        return value


@lru_cache()
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()
