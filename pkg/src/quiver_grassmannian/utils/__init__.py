"""Configuration for data paths, the oracle budget and logging."""

from quiver_grassmannian.utils.config import Config, get_config

__all__ = ["Config", "get_config"]
