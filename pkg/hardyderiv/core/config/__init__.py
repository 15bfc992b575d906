"""
Configuration Module

Centralized, validated configuration for the numerical toolkit.
"""

from .central_config import CentralConfig, ConfigSpec, get_config, reload_config

__all__ = [
    "CentralConfig",
    "ConfigSpec",
    "get_config",
    "reload_config",
]
