"""Configuration management."""

import os
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator
from sympy import isprime


_REPO_DATA = Path(__file__).resolve().parents[3] / "data"


def _get_setting(key: str, default: str = "") -> str:
    """Get a setting from the environment."""
    return os.getenv(key, default)


class Config(BaseModel):
    """Application configuration."""

    data_path: str = Field(default="./data", description="Root of bundled quivers and fixtures")
    oracle_budget: int = Field(
        default=200000, gt=0, description="Maximum candidate subspace tuples the oracle may enumerate"
    )
    default_primes: tuple[int, ...] = Field(
        default=(2, 3, 5), description="Primes used by oracle-count when none are given"
    )
    log_level: str = Field(default="WARNING", description="Root log level for the CLI")

    @field_validator("default_primes", mode="before")
    @classmethod
    def _split_primes(cls, value):
        if isinstance(value, str):
            value = [part for part in value.replace(" ", "").split(",") if part]
        primes = tuple(int(p) for p in value)
        for p in primes:
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
        return primes

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return value

    def data_file(self, *parts: str) -> Path:
        """A path under the data root; falls back to the repository's data/ directory."""
        root = Path(self.data_path)
        if not root.exists() and _REPO_DATA.exists():
            root = _REPO_DATA
        return root.joinpath(*parts)


@lru_cache
def get_config() -> Config:
    """Load and return configuration from the environment."""
    load_dotenv()

    return Config(
        data_path=_get_setting("QG_DATA_PATH", "./data"),
        oracle_budget=_get_setting("QG_ORACLE_BUDGET", "200000"),
        default_primes=_get_setting("QG_PRIMES", "2,3,5"),
        log_level=_get_setting("QG_LOG_LEVEL", "WARNING"),
    )
