"""
Configuration management for the stratchi command line
"""
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="STRATCHI_", env_file=".env", extra="ignore")

    # Arithmetic
    INT_BITS: int = 64

    # Fuzzing
    FUZZ_SEED: int = 0
    FUZZ_TRIALS: int = 100
    FUZZ_MAX_STRATA: int = 8
    FUZZ_ENTRY_RANGE: int = 9
    FUZZ_WORKERS: int = 1

    # Output
    LOG_LEVEL: str = "WARNING"
    JSON_INDENT: int = 2
    METRICS_ENABLED: bool = True

    @field_validator("INT_BITS")
    @classmethod
    def _wide_enough(cls, value: int) -> int:
        if value < 64:
            raise ValueError("INT_BITS must be at least 64")
        return value

    @field_validator("FUZZ_TRIALS", "FUZZ_MAX_STRATA", "FUZZ_WORKERS")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")
        return value


settings = Settings()
