#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: errors.py
# Pathname: /path/to/ideal4/src/core/
# Description: Exception hierarchy for the IDEAL4 application. Every error
#              carries a stable error code used by the ErrorManager and the CLI
# -----------------------------------------------------------------------------

from typing import Any, Dict, Optional


class Ideal4Error(Exception):
    """Base class for all IDEAL4 errors"""

    code = "ideal4_error"

    def __init__(self, message: str, metadata: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.metadata = metadata or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "metadata": dict(self.metadata)}


class DomainError(Ideal4Error, ValueError):
    """Argument or chart point outside the admissible domain"""

    code = "domain_error"


class ParameterError(Ideal4Error, ValueError):
    """Family or function parameter outside its documented range"""

    code = "parameter_error"


class ConfigurationError(Ideal4Error):
    """Inconsistent grid, configuration file or environment setting"""

    code = "configuration_error"


class NumericError(Ideal4Error):
    """Iteration or quadrature did not reach the requested accuracy"""

    code = "numeric_error"

    def __init__(self, message: str, estimate: float = float("nan"),
                 metadata: Optional[Dict[str, Any]] = None):
        super().__init__(message, metadata)
        self.estimate = estimate
        self.metadata.setdefault("estimate", estimate)


class PoleError(Ideal4Error):
    """Evaluation at (or too close to) a pole of a quotient function"""

    code = "pole_error"

    def __init__(self, message: str, nearest: float,
                 metadata: Optional[Dict[str, Any]] = None):
        super().__init__(message, metadata)
        self.nearest = nearest
        self.metadata.setdefault("nearest", nearest)


class DegenerateImmersionError(Ideal4Error):
    """First partials fail to span a 3-space at the requested point"""

    code = "degenerate_immersion"


class ClassificationError(Ideal4Error):
    """Eigenvalue-case classification requested for a non-ideal point"""

    code = "classification_error"
