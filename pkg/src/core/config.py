"""
Configuration

Application settings and environment configuration for snc-toolkit.
"""

import sys
from fractions import Fraction
from typing import Literal, Optional

from pydantic import Field, SecretStr, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application configuration settings.

    Supports both environment variables and .env file loading.
    Environment variables take precedence over .env file values.
    """

    # Application settings
    debug: bool = Field(
        default=False,
        description="Enable running-identity assertions and solver self-checks",
    )
    log_level: str = Field(
        default="info", description="Log level (debug, info, warning, error)"
    )
    environment: Literal["development", "staging", "production"] = Field(
        default="development", description="Application environment"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalize and validate log level."""
        allowed_levels = {"debug", "info", "warning", "error"}
        normalized = v.lower().strip()
        if normalized not in allowed_levels:
            raise ValueError(
                f"log_level must be one of {sorted(allowed_levels)}, got '{v}'"
            )
        return normalized

    # Worker pool (read from SNC_THREADS)
    snc_threads: int = Field(default=1, ge=1, description="Sweep worker count")

    # Logging file settings (optional)
    log__to_file: bool = Field(
        default=False, description="Also write logs to a rotating file"
    )
    log__dir: str = Field(
        default="logs", description="Directory where log files are stored"
    )
    log__file_path: Optional[str] = Field(
        default=None, description="Custom log file path; overrides log__dir if set"
    )
    log__file_level: str = Field(default="INFO", description="File handler log level")
    log__file_max_bytes: int = Field(
        default=10 * 1024 * 1024,
        gt=0,
        description="Max size of a log file before rotation",
    )
    log__file_backup_count: int = Field(
        default=3, ge=0, description="Number of backup log files to keep"
    )

    # Logfire settings
    logfire__enabled: bool = Field(
        default=False, description="Export logs to Logfire"
    )
    logfire__service_name: str = Field(
        default="snc_toolkit", description="Logfire service name"
    )
    logfire__environment: str = Field(
        default="development", description="Logfire environment"
    )
    logfire__token: Optional[SecretStr] = Field(
        default=None, description="Logfire token"
    )

    # Enumeration caps
    enumeration__max_all_n: int = Field(
        default=6, ge=1, description="Largest n for all-digraph enumeration"
    )
    enumeration__max_tournament_n: int = Field(
        default=7, ge=1, description="Largest n for tournament enumeration"
    )
    enumeration__max_canonical_n: int = Field(
        default=8, ge=1, description="Largest n for brute-force canonical forms"
    )

    # Random sweep model
    random__p_forward: str = Field(
        default="1/3", description="Probability that a pair is oriented low->high"
    )
    random__p_backward: str = Field(
        default="1/3", description="Probability that a pair is oriented high->low"
    )

    @field_validator("random__p_forward", "random__p_backward")
    @classmethod
    def validate_probability(cls, v: str) -> str:
        """Probabilities must parse as exact fractions in [0, 1]."""
        try:
            value = Fraction(v.strip())
        except ZeroDivisionError as exc:
            raise ValueError(f"probability has zero denominator: '{v}'") from exc
        if not 0 <= value <= 1:
            raise ValueError(f"probability must lie in [0, 1], got '{v}'")
        return str(value)

    # Column elimination
    elimination__strict: bool = Field(
        default=True,
        description="Reject inputs with positive off-diagonal entries",
    )

    # Conjecture suite
    conjecture__c5_lp_crosscheck: bool = Field(
        default=False, description="Cross-check C5 with the free-variable LP"
    )
    conjecture__kl_min_out_degree: int = Field(
        default=7, ge=0, description="Minimum out-degree required by kl_prune"
    )

    # Sweep orchestration
    sweep__chunk_size: int = Field(
        default=256, ge=1, description="Instances per worker task"
    )
    sweep__checkpoint_interval: int = Field(
        default=1000, ge=1, description="Instances between checkpoint writes"
    )

    @property
    def random_p_forward(self) -> Fraction:
        return Fraction(self.random__p_forward)

    @property
    def random_p_backward(self) -> Fraction:
        return Fraction(self.random__p_backward)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        case_sensitive=False,
        env_nested_delimiter="__",
    )


def create_settings() -> Settings:
    """
    Create and validate settings instance.

    Standard output is reserved for command payloads, so the summary is
    written to standard error and only in debug mode.

    Returns:
        Settings: Configured settings instance

    Raises:
        RuntimeError: If configuration validation fails
    """
    try:
        settings_instance = Settings()

        if settings_instance.debug:
            print("🔧 Configuration loaded successfully", file=sys.stderr)
            print(f"   Environment: {settings_instance.environment}", file=sys.stderr)
            print(f"   Log level: {settings_instance.log_level}", file=sys.stderr)
            print(f"   Workers: {settings_instance.snc_threads}", file=sys.stderr)

        return settings_instance

    except Exception as e:
        print(f"❌ Configuration loading failed: {e}", file=sys.stderr)
        raise RuntimeError(f"Configuration loading failed: {e}") from e


# Global configuration instance
settings = create_settings()
