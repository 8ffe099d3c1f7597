"""Configuration, logging setup, error codes and error tracking"""

from src.core.config_manager import APP_NAME, APP_VERSION, ConfigManager, setup_logging
from src.core.error_manager import ErrorManager
from src.core.errors import (
    ClassificationError,
    ConfigurationError,
    DegenerateImmersionError,
    DomainError,
    Ideal4Error,
    NumericError,
    ParameterError,
    PoleError,
)

__all__ = [
    "APP_NAME", "APP_VERSION", "ClassificationError", "ConfigManager", "ConfigurationError",
    "DegenerateImmersionError", "DomainError", "ErrorManager", "Ideal4Error", "NumericError",
    "ParameterError", "PoleError", "setup_logging",
]
