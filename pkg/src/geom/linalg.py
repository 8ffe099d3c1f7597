#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: linalg.py
# Pathname: /path/to/ideal4/src/geom/
# Description: Small dense linear algebra for 3x3 symmetric problems
# -----------------------------------------------------------------------------

import math

import numpy as np

from src.core.errors import NumericError

# Below this value of 1 - r^2 two eigenvalues nearly coincide and acos loses digits
NEAR_DOUBLE_ROOT = 1e-4
JACOBI_MAX_SWEEPS = 50


def jacobi_eigenvalues(S: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi rotations, ascending"""
    a = np.array(S, dtype=float)
    n = a.shape[0]
    scale = max(np.max(np.abs(a)), np.finfo(float).tiny)
    for _ in range(JACOBI_MAX_SWEEPS):
        off = math.sqrt(sum(a[i, j] ** 2 for i in range(n) for j in range(n) if i != j))
        if off <= 1e-14 * scale:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                a[p, q] = a[q, p] = 0.0
    raise NumericError("Jacobi eigenvalue iteration did not converge",
                       estimate=float(np.max(np.abs(a - np.diag(np.diag(a))))))


def symmetric_eigenvalues(S: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric 3x3 matrix, ascending

    Closed-form trigonometric solution of the characteristic cubic; falls
    back to Jacobi rotations near a double root where the closed form is
    ill-conditioned.
    """
    A = 0.5 * (np.asarray(S, dtype=float) + np.asarray(S, dtype=float).T)
    p1 = A[0, 1] ** 2 + A[0, 2] ** 2 + A[1, 2] ** 2
    if p1 == 0.0:
        return np.sort(np.diag(A))

    q = np.trace(A) / 3.0
    p2 = (A[0, 0] - q) ** 2 + (A[1, 1] - q) ** 2 + (A[2, 2] - q) ** 2 + 2.0 * p1
    p = math.sqrt(p2 / 6.0)
    if p <= 1e-14 * max(abs(q), 1e-300):
        return jacobi_eigenvalues(A)

    B = (A - q * np.eye(3)) / p
    r = float(np.linalg.det(B)) / 2.0
    if 1.0 - r * r < NEAR_DOUBLE_ROOT:
        return jacobi_eigenvalues(A)

    phi = math.acos(r) / 3.0
    largest = q + 2.0 * p * math.cos(phi)
    smallest = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    middle = 3.0 * q - largest - smallest
    return np.array([smallest, middle, largest])


def inverse_sqrt_spd(G: np.ndarray) -> np.ndarray:
    """G^(-1/2) of a symmetric positive-definite matrix"""
    w, V = np.linalg.eigh(G)
    if np.min(w) <= 0.0:
        raise NumericError("Matrix is not positive definite", estimate=float(np.min(w)))
    return (V / np.sqrt(w)) @ V.T


def reduced_spectrum(G: np.ndarray, S: np.ndarray) -> np.ndarray:
    """Spectrum of G^-1 S for symmetric S and positive-definite G, ascending"""
    W = inverse_sqrt_spd(G)
    return symmetric_eigenvalues(W @ S @ W)
