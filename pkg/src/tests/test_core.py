#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: test_core.py
# Pathname: /path/to/ideal4/src/tests/
# Description: Tests for configuration loading, logging setup, the error
#              hierarchy and the error manager
# -----------------------------------------------------------------------------

import json
import logging
import os

import pytest

from src.core import (
    APP_VERSION,
    ConfigManager,
    ConfigurationError,
    DegenerateImmersionError,
    DomainError,
    ErrorManager,
    NumericError,
    PoleError,
    setup_logging,
)
from src.core.config_manager import DEFAULT_CONFIG, THREADS_ENV


# --- configuration ------------------------------------------------------------

def test_config_defaults_when_file_missing(tmp_path):
    manager = ConfigManager(str(tmp_path / "absent.json"), environ={})
    assert manager.config == DEFAULT_CONFIG
    assert manager.get("verify", "tolerance") == 1e-6
    assert manager.get("verify", "missing", 3) == 3
    assert manager.config is not DEFAULT_CONFIG


def test_config_file_is_merged_over_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"verify": {"tolerance": 1e-8}, "scan": {"threads": 3}}), encoding="utf-8")
    manager = ConfigManager(str(path), environ={})
    assert manager.get("verify", "tolerance") == 1e-8
    assert manager.get("verify", "structure_tolerance") == 1e-6
    assert manager.thread_count() == 3
    assert manager.section("app")["version"] == APP_VERSION


def test_config_invalid_json_falls_back(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json", encoding="utf-8")
    assert ConfigManager(str(path), environ={}).config == DEFAULT_CONFIG


def test_thread_environment_override():
    assert ConfigManager(None, environ={THREADS_ENV: "5"}).thread_count() == 5
    assert ConfigManager(None, environ={THREADS_ENV: ""}).thread_count() >= 1
    assert ConfigManager(None, environ={THREADS_ENV: "0"}).thread_count() == max(1, os.cpu_count() or 1)


@pytest.mark.parametrize("value", ["abc", "1.5", "-2"])
def test_thread_environment_rejects_bad_values(value):
    with pytest.raises(ConfigurationError) as info:
        ConfigManager(None, environ={THREADS_ENV: value})
    assert THREADS_ENV in str(info.value)


def test_setup_logging_writes_log_file(tmp_path):
    config = json.loads(json.dumps(DEFAULT_CONFIG))
    config["logging"].update({"file_enabled": True, "log_dir": str(tmp_path / "logs")})
    try:
        setup_logging(config, verbose=True)
        logging.getLogger("ScanRunner").info("scan started")
        for handler in logging.getLogger().handlers:
            handler.flush()
        text = (tmp_path / "logs" / "ideal4.log").read_text(encoding="utf-8")
        assert "ScanRunner - INFO - scan started" in text
    finally:
        for handler in list(logging.getLogger().handlers):
            handler.close()
        setup_logging(DEFAULT_CONFIG)


# --- error hierarchy ----------------------------------------------------------

def test_error_codes_and_metadata():
    error = DomainError("t outside (0, 1)", {"t": 2.0})
    assert isinstance(error, ValueError)
    assert error.to_dict() == {"code": "domain_error", "message": "t outside (0, 1)", "metadata": {"t": 2.0}}

    pole = PoleError("ns has a pole", nearest=0.0)
    assert pole.nearest == 0.0
    assert pole.to_dict()["metadata"] == {"nearest": 0.0}

    numeric = NumericError("budget exhausted", estimate=1.25)
    assert numeric.code == "numeric_error"
    assert numeric.metadata["estimate"] == 1.25


# --- error manager ------------------------------------------------------------

def test_report_and_resolve(error_manager):
    first = error_manager.report_error("ScanRunner", "degenerate_immersion", "rank 2", severity="error")
    second = error_manager.report_error("ScanRunner", "pole_error", "near sd zero", severity="bogus")
    assert (first, second) == (1, 2)
    assert error_manager.error_count == 2
    assert [e["id"] for e in error_manager.get_active_errors(min_severity="error")] == [1]
    assert error_manager.get_active_errors()[1]["severity"] == "warning"

    assert error_manager.resolve_error(first, "skipped node")
    assert not error_manager.resolve_error(first)
    assert [e["id"] for e in error_manager.get_active_errors()] == [2]
    assert error_manager.clear_resolved_errors() == 1
    assert [e["id"] for e in error_manager.get_error_history()] == [2]


def test_history_limit():
    manager = ErrorManager({"error_manager": {"max_history": 3}})
    for i in range(5):
        manager.report_error("test", "code", f"message {i}", severity="info")
    history = manager.get_error_history()
    assert [e["message"] for e in history] == ["message 2", "message 3", "message 4"]
    assert len(manager.get_error_history(limit=1)) == 1
    assert manager.get_error_history(min_severity="error") == []


def test_active_errors_are_bounded():
    manager = ErrorManager({"error_manager": {"max_history": 10, "max_active": 3}})
    ids = [manager.report_error("ScanRunner", "pole_error", f"node {i}") for i in range(6)]
    assert [e["id"] for e in manager.get_active_errors()] == ids[-3:]
    assert len(manager.get_error_history()) == 6
    assert not manager.resolve_error(ids[0])
    assert manager.resolve_error(ids[-1])


def test_callbacks(error_manager):
    seen = []

    def broken(error):
        raise RuntimeError("callback failure")

    error_manager.register_callback(seen.append)
    error_manager.register_callback(seen.append)
    error_manager.register_callback(broken)
    error_manager.report_error("test", "code", "first")
    error_manager.unregister_callback(seen.append)
    error_manager.report_error("test", "code", "second")
    assert [e["message"] for e in seen] == ["first"]


def test_report_exception(error_manager):
    error_id = error_manager.report_exception(
        "ScanRunner", DegenerateImmersionError("rank 2", {"t": 0.0}), metadata={"index": [1, 0, 0]})
    error = error_manager.get_active_errors()[0]
    assert error["id"] == error_id
    assert error["code"] == "degenerate_immersion"
    assert error["metadata"] == {"t": 0.0, "index": [1, 0, 0]}

    error_manager.report_exception("test", KeyError("x"))
    assert error_manager.get_error_history()[-1]["code"] == "KeyError"
