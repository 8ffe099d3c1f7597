#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: pipeline.py
# Pathname: /path/to/ideal4/src/geom/
# Description: Pointwise pipeline for hypersurfaces of E^4: induced metric,
#              unit normal, second fundamental form, shape operator,
#              Gauss-equation curvature and the delta(2) invariant
# -----------------------------------------------------------------------------

import math
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from src.core.errors import DegenerateImmersionError
from src.geom.immersion import ImmersionMap, PointLike
from src.geom.linalg import inverse_sqrt_spd, reduced_spectrum

logger = logging.getLogger("Pipeline")

GRAM_THRESHOLD = 1e-12
# Constant sectional curvature of the ambient space
EUCLIDEAN = 0.0


@dataclass(frozen=True)
class MetricData:
    """Induced metric g_ij, its inverse and Christoffel symbols christoffel[m, i, j] = Gamma^m_ij"""
    g: np.ndarray
    g_inv: np.ndarray
    christoffel: np.ndarray

    def inner(self, X: np.ndarray, Y: np.ndarray) -> float:
        return float(np.asarray(X) @ self.g @ np.asarray(Y))

    def orthonormal_frame(self) -> np.ndarray:
        """Columns form a g-orthonormal basis of coordinate vectors"""
        return inverse_sqrt_spd(self.g)


@dataclass(frozen=True)
class ShapeData:
    normal: np.ndarray
    h: np.ndarray
    shape_op: np.ndarray
    principal_curvatures: np.ndarray


@dataclass(frozen=True)
class CurvatureData:
    """Curvature at a point; riemann[i, j, k, l] = R(d_i, d_j; d_k, d_l)

    Sectional curvature of span(X, Y) is R(X, Y; Y, X) / (|X|^2 |Y|^2 - <X, Y>^2).
    """
    riemann: np.ndarray
    ricci: np.ndarray
    ricci_spectrum: np.ndarray
    tau: float
    inf_K: float
    delta: float
    mean_sq: float
    epsilon: float = EUCLIDEAN
    metric: Optional[MetricData] = field(default=None, repr=False)

    @property
    def bound(self) -> float:
        return 2.25 * self.mean_sq + 2.0 * self.epsilon

    @property
    def ricci_operator(self) -> np.ndarray:
        return self.metric.g_inv @ self.ricci

    def riemann_form(self, X, Y, Z, W) -> float:
        return float(np.einsum("ijkl,i,j,k,l->", self.riemann, X, Y, Z, W))

    def sectional(self, X, Y) -> float:
        X = np.asarray(X, dtype=float)
        Y = np.asarray(Y, dtype=float)
        area = self.metric.inner(X, X) * self.metric.inner(Y, Y) - self.metric.inner(X, Y) ** 2
        if area <= 0.0:
            raise DegenerateImmersionError("Sectional curvature needs two independent vectors")
        return self.riemann_form(X, Y, Y, X) / area


def pullback_metric(imm: ImmersionMap, p: PointLike) -> MetricData:
    """Induced metric and Levi-Civita connection at p

    Raises:
        DegenerateImmersionError: the partials are (numerically) dependent
    """
    J = imm.first_partials(p)
    H = imm.second_partials(p)
    g = J @ J.T

    scale = float(np.max(np.linalg.norm(J, axis=1)))
    gram = float(np.linalg.det(g))
    if not scale > 0.0 or gram <= GRAM_THRESHOLD * scale ** 6:
        raise DegenerateImmersionError(
            f"{imm.name} is degenerate at {p}: Gram determinant {gram:.3e}",
            {"immersion": imm.name, "gram": gram}
        )
    g_inv = np.linalg.inv(g)

    # dg[k, i, j] = d_k g_ij
    dg = np.einsum("kia,ja->kij", H, J)
    dg = dg + dg.transpose(0, 2, 1)
    # Gamma^m_ij = 1/2 g^ml (d_i g_lj + d_j g_li - d_l g_ij)
    first_kind = 0.5 * (np.einsum("ilj->lij", dg) + np.einsum("jli->lij", dg) - dg)
    christoffel = np.einsum("ml,lij->mij", g_inv, first_kind)
    return MetricData(g, g_inv, christoffel)


def unit_normal(imm: ImmersionMap, p: PointLike) -> np.ndarray:
    """Unit normal e4 with det(d_1 L, d_2 L, d_3 L, e4) > 0"""
    J = imm.first_partials(p)
    cofactors = np.array([
        (-1.0) ** (3 + i) * np.linalg.det(np.delete(J, i, axis=1)) for i in range(4)
    ])
    norm = float(np.linalg.norm(cofactors))
    scale = float(np.max(np.linalg.norm(J, axis=1)))
    if not norm > math.sqrt(GRAM_THRESHOLD) * scale ** 3:
        raise DegenerateImmersionError(f"{imm.name} has no normal at {p}",
                                       {"immersion": imm.name, "cross_norm": norm})
    return cofactors / norm


def second_fundamental(imm: ImmersionMap, p: PointLike,
                       metric: Optional[MetricData] = None) -> ShapeData:
    md = metric if metric is not None else pullback_metric(imm, p)
    normal = unit_normal(imm, p)
    H = imm.second_partials(p)
    h = H @ normal
    h = 0.5 * (h + h.T)
    shape_op = md.g_inv @ h
    return ShapeData(normal, h, shape_op, reduced_spectrum(md.g, h))


def mean_curvature_sq(sd: ShapeData) -> float:
    return (float(np.trace(sd.shape_op)) / 3.0) ** 2


def gauss_tensor(h: np.ndarray, g: np.ndarray, epsilon: float = EUCLIDEAN) -> np.ndarray:
    """R_ijkl = h_il h_jk - h_ik h_jl + epsilon (g_il g_jk - g_ik g_jl)"""
    R = np.einsum("il,jk->ijkl", h, h) - np.einsum("ik,jl->ijkl", h, h)
    if epsilon != 0.0:
        R = R + epsilon * (np.einsum("il,jk->ijkl", g, g) - np.einsum("ik,jl->ijkl", g, g))
    return R


def inf_sectional(ricci_operator: np.ndarray, tau: float,
                  metric: Optional[MetricData] = None) -> float:
    """Infimum of sectional curvature in dimension 3: tau - largest Ricci eigenvalue

    The plane orthogonal to a unit vector n has curvature tau - Ric(n, n).
    """
    if metric is not None:
        ricci = metric.g @ np.asarray(ricci_operator)
        spectrum = reduced_spectrum(metric.g, 0.5 * (ricci + ricci.T))
    else:
        spectrum = np.sort(np.real(np.linalg.eigvals(np.asarray(ricci_operator))))
    return float(tau - spectrum[-1])


def curvature_from_gauss(sd: ShapeData, md: MetricData, epsilon: float = EUCLIDEAN) -> CurvatureData:
    R = gauss_tensor(sd.h, md.g, epsilon)
    ricci = np.einsum("il,ijkl->jk", md.g_inv, R)
    ricci = 0.5 * (ricci + ricci.T)
    spectrum = reduced_spectrum(md.g, ricci)
    tau = 0.5 * float(np.trace(md.g_inv @ ricci))
    inf_K = float(tau - spectrum[-1])
    return CurvatureData(
        riemann=R,
        ricci=ricci,
        ricci_spectrum=spectrum,
        tau=tau,
        inf_K=inf_K,
        delta=tau - inf_K,
        mean_sq=mean_curvature_sq(sd),
        epsilon=epsilon,
        metric=md,
    )


def curvature_at(imm: ImmersionMap, p: PointLike, epsilon: float = EUCLIDEAN):
    """Metric, shape and curvature data at one point"""
    md = pullback_metric(imm, p)
    sd = second_fundamental(imm, p, md)
    return md, sd, curvature_from_gauss(sd, md, epsilon)


def _fibonacci_sphere(samples: int) -> np.ndarray:
    i = np.arange(samples) + 0.5
    z = 1.0 - 2.0 * i / samples
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    phi = math.pi * (1.0 + math.sqrt(5.0)) * i
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def _plane_basis(normals: np.ndarray):
    """Two orthonormal vectors spanning the plane orthogonal to each unit normal"""
    helper = np.where(np.abs(normals[:, :1]) < 0.9, [[1.0, 0.0, 0.0]], [[0.0, 1.0, 0.0]])
    X = np.cross(normals, helper)
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    Y = np.cross(normals, X)
    return X, Y


def sampled_inf_sectional(cd: CurvatureData, samples: int = 10000, refine: bool = True) -> float:
    """Minimum sectional curvature by sampling planes directly

    Planes are parametrized by their unit normal in a g-orthonormal frame;
    the best sample is refined with Nelder-Mead over the normal's angles.
    """
    frame = cd.metric.orthonormal_frame()
    Rf = np.einsum("abcd,ai,bj,ck,dl->ijkl", cd.riemann, frame, frame, frame, frame)

    def curvature(normals: np.ndarray) -> np.ndarray:
        X, Y = _plane_basis(normals)
        return np.einsum("ijkl,ni,nj,nk,nl->n", Rf, X, Y, Y, X)

    normals = _fibonacci_sphere(samples)
    values = curvature(normals)
    best = int(np.argmin(values))
    result = float(values[best])
    if not refine:
        return result

    n0 = normals[best]
    start = np.array([math.acos(max(-1.0, min(1.0, n0[2]))), math.atan2(n0[1], n0[0])])

    def objective(angles: np.ndarray) -> float:
        theta, phi = angles
        n = np.array([[math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]])
        return float(curvature(n)[0])

    refined = minimize(objective, start, method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 4000})
    if not refined.success:
        logger.warning(f"Nelder-Mead refinement stopped early: {refined.message}")
    return min(result, float(refined.fun))

