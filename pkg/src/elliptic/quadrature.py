#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: quadrature.py
# Pathname: /path/to/ideal4/src/elliptic/
# Description: Adaptive Simpson quadrature with Richardson error estimate
# -----------------------------------------------------------------------------

import math
from typing import Callable, NamedTuple

from src.core.errors import DomainError, NumericError, ParameterError

DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_SUBDIVISIONS = 200000


class QuadratureResult(NamedTuple):
    """Integral value, accumulated error estimate and integrand evaluations"""
    value: float
    error: float
    evaluations: int


def _checked(f: Callable[[float], float], x: float) -> float:
    y = float(f(x))
    if not math.isfinite(y):
        raise DomainError(f"Integrand is not finite at x={x!r}", {"x": x})
    return y


def integrate_adaptive(f: Callable[[float], float], a: float, b: float,
                       tol: float = DEFAULT_TOLERANCE,
                       max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS) -> QuadratureResult:
    """Integrate f over [a, b] to absolute accuracy tol

    Intervals are processed depth-first from an explicit stack, so the result
    is a deterministic function of the inputs.

    Args:
        f: Real integrand, finite on [a, b]
        a: Lower limit
        b: Upper limit (b < a integrates with reversed sign)
        tol: Requested absolute error, > 0
        max_subdivisions: Subdivision budget

    Returns:
        QuadratureResult with the value and the Richardson error estimate

    Raises:
        ParameterError: tol <= 0 or non-finite limits
        DomainError: integrand not finite at a node
        NumericError: budget exhausted; carries the achieved estimate
    """
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ParameterError(f"Quadrature tolerance must be positive, got {tol!r}")
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ParameterError(f"Quadrature limits must be finite, got [{a!r}, {b!r}]")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0)

    sign = 1.0
    if b < a:
        a, b = b, a
        sign = -1.0

    fa = _checked(f, a)
    fb = _checked(f, b)
    m = 0.5 * (a + b)
    fm = _checked(f, m)
    evaluations = 3
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    pieces = []
    errors = []
    splits = 0
    stack = [(a, b, fa, fm, fb, whole, tol)]

    while stack:
        lo, hi, flo, fmid, fhi, estimate, eps = stack.pop()
        mid = 0.5 * (lo + hi)
        left_mid = 0.5 * (lo + mid)
        right_mid = 0.5 * (mid + hi)
        flm = _checked(f, left_mid)
        frm = _checked(f, right_mid)
        evaluations += 2

        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - estimate

        resolution = 64.0 * math.ulp(max(abs(lo), abs(hi), 1.0))
        if abs(delta) <= 15.0 * eps or (hi - lo) <= resolution:
            pieces.append(left + right + delta / 15.0)
            errors.append(abs(delta) / 15.0)
            continue

        splits += 1
        if splits > max_subdivisions:
            achieved = math.fsum(errors) + abs(delta) / 15.0
            raise NumericError(
                f"Adaptive quadrature did not converge within {max_subdivisions} subdivisions",
                estimate=achieved
            )
        stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * eps))
        stack.append((lo, mid, flo, flm, fmid, left, 0.5 * eps))

    return QuadratureResult(sign * math.fsum(pieces), math.fsum(errors), evaluations)
