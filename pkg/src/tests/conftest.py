#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: conftest.py
# Pathname: /path/to/ideal4/src/tests/
# Description: Shared fixtures for the IDEAL4 test suite
# -----------------------------------------------------------------------------

import json

import numpy as np
import pytest

from src.core.config_manager import DEFAULT_CONFIG
from src.core.error_manager import ErrorManager
from src.catalog import build_family, family_a, family_c, generic_graph, product_L1, product_L2


@pytest.fixture
def error_manager():
    return ErrorManager(DEFAULT_CONFIG)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def cylinder():
    return family_a(1.0)


@pytest.fixture(scope="session")
def elliptic_family():
    return family_c(1.0)


@pytest.fixture(scope="session")
def control_graph():
    """P = t^2 + 2u^2 + 7v^2, strictly non-ideal at the origin"""
    return generic_graph((1.0, 2.0, 7.0))


@pytest.fixture(scope="session")
def catenoid_pair():
    return product_L1(), product_L2()


@pytest.fixture(scope="session")
def catalog_members():
    """(tag, a, coeffs) for every registered family with its default parameter"""
    specs = [("a", None, None), ("b", None, None), ("c", None, None), ("L1", None, None),
             ("L2", None, None), ("hyperplane", None, None), ("graph", None, (1.0, 2.0, 7.0))]
    return [build_family(tag, a, coeffs) for tag, a, coeffs in specs]


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(DEFAULT_CONFIG), encoding="utf-8")
    return str(path)
