#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: structure.py
# Pathname: /path/to/ideal4/src/geom/
# Description: Intrinsic Riemann tensor from the connection and residuals of
#              the Gauss and Codazzi equations
# -----------------------------------------------------------------------------

from typing import Callable, Optional

import numpy as np

from src.core.errors import DomainError
from src.geom.immersion import ChartBox, ChartPoint, ImmersionMap, PointLike
from src.geom.pipeline import MetricData, gauss_tensor, pullback_metric, second_fundamental

DEFAULT_STEP = 1e-4


def central_difference(field: Callable[[ChartPoint], np.ndarray], p: PointLike, axis: int,
                       step: float = DEFAULT_STEP, domain: Optional[ChartBox] = None) -> np.ndarray:
    """Fourth-order five-point derivative of an array-valued field along one chart axis

    Raises:
        DomainError: the stencil leaves the domain
    """
    p = ChartPoint.of(p)
    if not step > 0.0:
        raise DomainError(f"Difference step must be positive, got {step!r}")
    nodes = [p.shifted(axis, k * step) for k in (-2, -1, 1, 2)]
    if domain is not None:
        for node in nodes:
            if not domain.contains(node):
                raise DomainError(f"Difference stencil around {p} leaves the domain along axis {axis}",
                                  {"axis": axis, "step": step})
    fm2, fm1, fp1, fp2 = (np.asarray(field(node), dtype=float) for node in nodes)
    return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * step)


def intrinsic_riemann(metric_at: Callable[[ChartPoint], MetricData], p: PointLike,
                      step: float = DEFAULT_STEP, domain: Optional[ChartBox] = None) -> np.ndarray:
    """Coordinate Riemann tensor R[i, j, k, l] = <R(d_i, d_j) d_k, d_l> from the metric field alone

    R(d_i, d_j) d_k = (d_i G^m_jk - d_j G^m_ik + G^m_ip G^p_jk - G^m_jp G^p_ik) d_m
    """
    p = ChartPoint.of(p)
    md = metric_at(p)
    gamma = md.christoffel
    # dgamma[i, m, j, k] = d_i Gamma^m_jk
    dgamma = np.stack([
        central_difference(lambda q: metric_at(q).christoffel, p, axis, step, domain)
        for axis in range(3)
    ])
    curv = (np.einsum("imjk->mkij", dgamma) - np.einsum("jmik->mkij", dgamma)
            + np.einsum("mip,pjk->mkij", gamma, gamma) - np.einsum("mjp,pik->mkij", gamma, gamma))
    return np.einsum("lm,mkij->ijkl", md.g, curv)


def immersion_riemann(imm: ImmersionMap, p: PointLike, step: float = DEFAULT_STEP) -> np.ndarray:
    return intrinsic_riemann(lambda q: pullback_metric(imm, q), p, step, imm.domain)


def gauss_residual(imm: ImmersionMap, p: PointLike, step: float = DEFAULT_STEP) -> float:
    """Largest difference between intrinsic and Gauss-equation curvature, relative to max(1, |R|)"""
    md = pullback_metric(imm, p)
    sd = second_fundamental(imm, p, md)
    extrinsic = gauss_tensor(sd.h, md.g)
    intrinsic = immersion_riemann(imm, p, step)
    scale = max(1.0, float(np.max(np.abs(extrinsic))))
    return float(np.max(np.abs(intrinsic - extrinsic))) / scale


def covariant_h(h_field: Callable[[ChartPoint], np.ndarray], christoffel: np.ndarray,
                p: PointLike, step: float = DEFAULT_STEP,
                domain: Optional[ChartBox] = None) -> np.ndarray:
    """nabla h[i, j, k] = d_i h_jk - Gamma^m_ij h_mk - Gamma^m_ik h_jm"""
    h = np.asarray(h_field(ChartPoint.of(p)), dtype=float)
    dh = np.stack([central_difference(h_field, p, axis, step, domain) for axis in range(3)])
    return (dh - np.einsum("mij,mk->ijk", christoffel, h)
            - np.einsum("mik,jm->ijk", christoffel, h))


def codazzi_residual(imm: ImmersionMap, p: PointLike, step: float = DEFAULT_STEP,
                     h_field: Optional[Callable[[ChartPoint], np.ndarray]] = None) -> float:
    """max |(nabla_i h)(j, k) - (nabla_j h)(i, k)|; the normal connection of a hypersurface vanishes

    Args:
        imm: Immersion supplying the connection
        p: Chart point
        step: Difference step
        h_field: Replacement second fundamental form field, e.g. a perturbed one
    """
    md = pullback_metric(imm, p)
    if h_field is None:
        h_field = lambda q: second_fundamental(imm, q).h  # noqa: E731
    nabla = covariant_h(h_field, md.christoffel, p, step, imm.domain)
    return float(np.max(np.abs(nabla - nabla.transpose(1, 0, 2))))
