#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: config_manager.py
# Pathname: /path/to/ideal4/src/core/
# Description: Configuration loading and logging setup for IDEAL4
# -----------------------------------------------------------------------------

import os
import copy
import json
import logging
import logging.handlers
from typing import Dict, Any, Optional

from src.core.errors import ConfigurationError

APP_NAME = "IDEAL4"
APP_VERSION = "0.1.0"
THREADS_ENV = "IDEAL4_THREADS"

DEFAULT_CONFIG = {
    "app": {
        "name": APP_NAME,
        "version": APP_VERSION,
        "author": "Thomas Fischer",
        "license": "MIT"
    },
    "verify": {
        "tolerance": 1e-6,
        "structure_tolerance": 1e-6,
        "structure_step": 1e-4,
        "include_structure": True
    },
    "scan": {
        "threads": 0
    },
    "logging": {
        "level": "WARNING",
        "file_enabled": False,
        "log_dir": "logs",
        "max_size_mb": 10,
        "backup_count": 5
    },
    "error_manager": {
        "max_history": 1000,
        "max_active": 1000
    }
}

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _deep_merge(base: Dict, override: Dict) -> Dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Loads the JSON configuration and applies environment overrides"""

    def __init__(self, config_path: Optional[str] = "config/config.json",
                 environ: Optional[Dict[str, str]] = None):
        self.logger = logging.getLogger("ConfigManager")
        self.config_path = config_path
        self.environ = os.environ if environ is None else environ
        self.config = self._load_config(config_path)
        self._apply_environment()

    def _load_config(self, config_path: Optional[str]) -> Dict:
        """Load configuration from JSON file, falling back to defaults"""
        if not config_path:
            return copy.deepcopy(DEFAULT_CONFIG)
        try:
            if os.path.exists(config_path):
                with open(config_path, 'r', encoding='utf-8') as f:
                    loaded = json.load(f)
                self.logger.info(f"Configuration loaded from {config_path}")
                return _deep_merge(DEFAULT_CONFIG, loaded)
            self.logger.warning(f"Configuration file {config_path} not found, using defaults")
        except (OSError, ValueError) as e:
            self.logger.error(f"Error loading configuration: {e}")
        return copy.deepcopy(DEFAULT_CONFIG)

    def _apply_environment(self) -> None:
        raw = self.environ.get(THREADS_ENV)
        if raw is None or raw == "":
            return
        try:
            threads = int(raw)
        except ValueError:
            raise ConfigurationError(f"{THREADS_ENV} must be an integer, got {raw!r}")
        if threads < 0:
            raise ConfigurationError(f"{THREADS_ENV} must be >= 0, got {threads}")
        self.config["scan"]["threads"] = threads

    def get(self, section: str, key: str, default: Any = None) -> Any:
        return self.config.get(section, {}).get(key, default)

    def section(self, name: str) -> Dict:
        return dict(self.config.get(name, {}))

    def thread_count(self) -> int:
        """Worker threads for scans; 0 in the configuration means one per CPU"""
        threads = int(self.get("scan", "threads", 0))
        if threads <= 0:
            return max(1, os.cpu_count() or 1)
        return threads


def setup_logging(config: Dict, verbose: bool = False) -> None:
    """Set up logging: error-stream handler, optional rotating file handler"""
    log_config = config.get("logging", {})
    level_name = "INFO" if verbose else str(log_config.get("level", "WARNING")).upper()
    level = getattr(logging, level_name, logging.WARNING)

    handlers = [logging.StreamHandler()]
    if log_config.get("file_enabled", False):
        log_dir = log_config.get("log_dir", "logs")
        os.makedirs(log_dir, exist_ok=True)
        handlers.append(logging.handlers.RotatingFileHandler(
            os.path.join(log_dir, "ideal4.log"),
            maxBytes=int(log_config.get("max_size_mb", 10)) * 1024 * 1024,
            backupCount=int(log_config.get("backup_count", 5)),
            encoding="utf-8"
        ))

    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)
