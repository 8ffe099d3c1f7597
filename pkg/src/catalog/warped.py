#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: warped.py
# Pathname: /path/to/ideal4/src/catalog/
# Description: Warped products dt^2 + f(t)^2 (du^2 + cos^2 u dv^2) over the
#              round 2-sphere, and checks of the warping ODE
# -----------------------------------------------------------------------------

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from src.core.errors import DomainError, ParameterError, PoleError
from src.elliptic import HALF_SQUARE_MODULUS, jacobi_minor, jacobi_sncndn
from src.geom.immersion import ChartBox, ChartPoint, ImmersionMap, PointLike
from src.geom.pipeline import MetricData, pullback_metric
from src.catalog.families import LATITUDE, LONGITUDE

# |sn(at)| below this is treated as sitting on a pole of ns
POLE_PROXIMITY = 1e-8
WARP_STEP = 1e-4


@dataclass(frozen=True)
class WarpedProductSpec:
    """Metric dt^2 + warp(t)^2 (du^2 + cos^2 u dv^2)"""
    warp: Callable[[float], float]
    warp_prime: Callable[[float], float]
    domain: ChartBox
    name: str = "warped"

    def metric_data(self, point: PointLike) -> MetricData:
        """Metric and Levi-Civita connection of the warped product at a chart point"""
        p = ChartPoint.of(point)
        if not self.domain.contains(p):
            raise DomainError(f"Chart point {p} lies outside the domain of {self.name}")
        f = float(self.warp(p.t))
        df = float(self.warp_prime(p.t))
        if not f > 0.0:
            raise DomainError(f"Warping function must be positive, got f({p.t})={f}")
        cu, su = math.cos(p.u), math.sin(p.u)
        g = np.diag([1.0, f * f, f * f * cu * cu])
        g_inv = np.diag([1.0, 1.0 / (f * f), 1.0 / (f * f * cu * cu)])

        gamma = np.zeros((3, 3, 3))
        gamma[0, 1, 1] = -f * df
        gamma[0, 2, 2] = -f * df * cu * cu
        gamma[1, 0, 1] = gamma[1, 1, 0] = df / f
        gamma[2, 0, 2] = gamma[2, 2, 0] = df / f
        gamma[1, 2, 2] = su * cu
        gamma[2, 1, 2] = gamma[2, 2, 1] = -su / cu
        return MetricData(g, g_inv, gamma)


def _sphere_domain(t_range) -> ChartBox:
    return ChartBox.from_ranges(t_range, LATITUDE, LONGITUDE)


def family_a_warp(a: float) -> WarpedProductSpec:
    return WarpedProductSpec(lambda t: a, lambda t: 0.0, _sphere_domain((-math.inf, math.inf)), "a-warp")


def family_b_warp(a: float) -> WarpedProductSpec:
    return WarpedProductSpec(lambda t: a * t, lambda t: a, _sphere_domain((0.0, math.inf)), "b-warp")


def family_c_warp(a: float) -> WarpedProductSpec:
    """f = sd(at)/a, f' = cn(at)/dn(at)^2 with modulus 1/sqrt(2)"""
    if not a > 0.0:
        raise ParameterError(f"Family c needs a > 0, got {a!r}")
    k = HALF_SQUARE_MODULUS.k

    def warp(t: float) -> float:
        s = jacobi_sncndn(a * t, k)
        return s.sn / (s.dn * a)

    def warp_prime(t: float) -> float:
        s = jacobi_sncndn(a * t, k)
        return s.cn / (s.dn * s.dn)

    t_max = 2.0 * HALF_SQUARE_MODULUS.quarter_period / a
    return WarpedProductSpec(warp, warp_prime, _sphere_domain((0.0, t_max)), "c-warp")


def metric_residual(imm: ImmersionMap, spec: WarpedProductSpec, p: PointLike) -> float:
    return float(np.max(np.abs(pullback_metric(imm, p).g - spec.metric_data(p).g)))


def connection_residual(imm: ImmersionMap, spec: WarpedProductSpec, p: PointLike) -> float:
    """Largest entry difference between the induced metric/connection and the warped-product ones"""
    induced = pullback_metric(imm, p)
    warped = spec.metric_data(p)
    return float(max(np.max(np.abs(induced.g - warped.g)),
                     np.max(np.abs(induced.christoffel - warped.christoffel))))


def family_c_metric_residual(imm: ImmersionMap, a: float, p: PointLike) -> float:
    return metric_residual(imm, family_c_warp(a), p)


def warp_ode_check(a: float, t: float, warp: Optional[Callable[[float], float]] = None,
                   step: float = WARP_STEP) -> float:
    """|f'/f - a cd(at) ns(at)| with f' by a five-point difference

    Args:
        a: Family parameter
        t: Profile parameter
        warp: Warping function to test, sd(at)/a by default
        step: Difference step

    Raises:
        PoleError: sn(at) vanishes (numerically) at t
    """
    if not a > 0.0:
        raise ParameterError(f"Family c needs a > 0, got {a!r}")
    k = HALF_SQUARE_MODULUS.k
    state = jacobi_sncndn(a * t, k)
    if abs(state.sn) < POLE_PROXIMITY:
        quarter = HALF_SQUARE_MODULUS.quarter_period
        nearest = 2.0 * quarter * round(a * t / (2.0 * quarter)) / a
        raise PoleError(f"ns has a pole next to t={t!r} (sn(at)={state.sn:.3e})", nearest=nearest,
                        metadata={"a": a, "t": t})
    f = warp if warp is not None else family_c_warp(a).warp
    value = f(t)
    derivative = (f(t - 2.0 * step) - 8.0 * f(t - step) + 8.0 * f(t + step) - f(t + 2.0 * step)) / (12.0 * step)
    expected = a * jacobi_minor("cd", a * t, k) * jacobi_minor("ns", a * t, k)
    return abs(derivative / value - expected)
