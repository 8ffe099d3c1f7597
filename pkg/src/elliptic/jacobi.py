#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: jacobi.py
# Pathname: /path/to/ideal4/src/elliptic/
# Description: Jacobi elliptic functions (major and minor), complete and
#              incomplete elliptic integrals of the first kind
# -----------------------------------------------------------------------------

import math
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from src.core.errors import DomainError, NumericError, ParameterError, PoleError
from src.elliptic.quadrature import integrate_adaptive, DEFAULT_TOLERANCE

logger = logging.getLogger("Jacobi")

MACHINE_EPS = 2.220446049250313e-16
AGM_MAX_ITERATIONS = 16
# Below / above these values of k^2 the first-order expansions are exact to rounding
SMALL_PARAMETER = 1e-9
LARGE_PARAMETER = 1.0 - 1e-10
POLE_TOLERANCE = 1e-14

# Glaisher notation: pq = p/q with n = 1
MINOR_FUNCTIONS = ("sn", "cn", "dn",
                   "ns", "nc", "nd",
                   "sc", "sd", "cs", "cd", "ds", "dc")


@dataclass(frozen=True)
class EllipticModulus:
    """Modulus k, complementary modulus k' and quarter period K(k)"""
    k: float
    kprime: float
    quarter_period: float

    @classmethod
    def from_k(cls, k: float) -> "EllipticModulus":
        _check_open_modulus(k)
        kprime = math.sqrt((1.0 - k) * (1.0 + k))
        return cls(k, kprime, complete_quarter_period(k))

    @classmethod
    def from_kprime(cls, kprime: float) -> "EllipticModulus":
        _check_open_modulus(kprime)
        k = math.sqrt((1.0 - kprime) * (1.0 + kprime))
        return cls(k, kprime, complete_quarter_period(k))

    @property
    def period(self) -> float:
        return 4.0 * self.quarter_period


@dataclass(frozen=True)
class JacobiState:
    """Values of sn, cn, dn at (u, k)"""
    u: float
    k: float
    sn: float
    cn: float
    dn: float

    def minor(self, name: str) -> float:
        return _quotient(name, self)


SQRT_HALF = math.sqrt(0.5)


def _check_open_modulus(k: float) -> None:
    if not (isinstance(k, (int, float)) and math.isfinite(k) and 0.0 < k < 1.0):
        raise DomainError(f"Modulus must lie in (0, 1), got {k!r}", {"k": k})


def _check_closed_modulus(k: float) -> None:
    if not (isinstance(k, (int, float)) and math.isfinite(k) and 0.0 <= k <= 1.0):
        raise DomainError(f"Modulus must lie in [0, 1], got {k!r}", {"k": k})


def agm(a: float, b: float, tol: float = MACHINE_EPS,
        max_iterations: int = AGM_MAX_ITERATIONS) -> float:
    """Arithmetic-geometric mean of two positive numbers"""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"AGM needs positive arguments, got ({a!r}, {b!r})")
    for _ in range(max_iterations):
        if abs(a - b) <= tol * a:
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    if abs(a - b) <= max(tol, 4.0 * MACHINE_EPS) * a:
        return 0.5 * (a + b)
    logger.error(f"AGM stalled at ({a!r}, {b!r}) after {max_iterations} iterations")
    raise NumericError(f"AGM did not converge in {max_iterations} iterations",
                       estimate=abs(a - b))


def complete_quarter_period(k: float, tol: float = 1e-15) -> float:
    """Complete elliptic integral of the first kind K(k), 0 < k < 1

    Computed as pi / (2 agm(1, k')); the relative AGM stopping tolerance
    bounds the absolute error by tol * K.
    """
    _check_open_modulus(k)
    if not tol > 0.0:
        raise ParameterError(f"Tolerance must be positive, got {tol!r}")
    return _quarter_period(k, max(tol, MACHINE_EPS))


@lru_cache(maxsize=512)
def _quarter_period(k: float, tol: float = MACHINE_EPS) -> float:
    kprime = math.sqrt((1.0 - k) * (1.0 + k))
    return math.pi / (2.0 * agm(1.0, kprime, tol))


def quarter_period_by_quadrature(k: float, tol: float = DEFAULT_TOLERANCE) -> float:
    """K(k) by adaptive quadrature of the smooth angular form of the integral"""
    _check_open_modulus(k)
    k2 = k * k
    result = integrate_adaptive(lambda theta: 1.0 / math.sqrt(1.0 - k2 * math.sin(theta) ** 2),
                                0.0, 0.5 * math.pi, tol)
    return result.value


def _sncndn_amplitude(u: float, k: float,
                      max_iterations: int = AGM_MAX_ITERATIONS) -> Tuple[float, float, float, float]:
    """sn, cn, dn and the amplitude by the descending Landen (AGM) scheme"""
    m = k * k

    if m < SMALL_PARAMETER:
        t = math.sin(u)
        b = math.cos(u)
        ai = 0.25 * m * (u - t * b)
        return t - ai * b, b + ai * t, 1.0 - 0.5 * m * t * t, u - ai

    if m >= LARGE_PARAMETER:
        ai = 0.25 * (1.0 - m)
        b = math.cosh(u)
        t = math.tanh(u)
        phi = 1.0 / b
        twon = b * math.sinh(u)
        sn = t + ai * (twon - u) / (b * b)
        amplitude = 2.0 * math.atan(math.exp(u)) - 0.5 * math.pi + ai * (twon - u) / b
        ai *= t * phi
        return sn, phi - ai * (twon - u), phi + ai * (twon + u), amplitude

    # Reduce modulo the real period 4K; sn and cn are 4K-periodic, dn 2K-periodic
    quarter = _quarter_period(k)
    turns = round(u / (4.0 * quarter))
    reduced = u - 4.0 * quarter * turns

    a = [1.0]
    c = [k]
    b = math.sqrt((1.0 - k) * (1.0 + k))
    twon = 1.0
    i = 0
    while abs(c[i] / a[i]) > MACHINE_EPS:
        if i >= max_iterations:
            logger.error(f"Landen descent stalled for k={k!r} at ratio {c[i] / a[i]:.3e}")
            raise NumericError(f"Landen descent did not converge for k={k!r}",
                               estimate=abs(c[i] / a[i]))
        ai = a[i]
        i += 1
        c.append(0.5 * (ai - b))
        t = math.sqrt(ai * b)
        a.append(0.5 * (ai + b))
        b = t
        twon *= 2.0

    phi = twon * a[i] * reduced
    while i > 0:
        t = c[i] * math.sin(phi) / a[i]
        phi = 0.5 * (math.asin(t) + phi)
        i -= 1

    sn = math.sin(phi)
    cn = math.cos(phi)
    # dn >= k' > 0, so the square root has no cancellation
    dn = math.sqrt(1.0 - m * sn * sn)
    return sn, cn, dn, phi + 2.0 * math.pi * turns


def jacobi_sncndn(u: float, k: float) -> JacobiState:
    """Jacobi elliptic functions sn, cn, dn at (u, k)

    Valid for every finite real u. k = 0 and k = 1 are the trigonometric and
    hyperbolic limits.

    Raises:
        DomainError: non-finite u or k outside [0, 1]
    """
    if not (isinstance(u, (int, float)) and math.isfinite(u)):
        raise DomainError(f"Argument must be finite, got {u!r}", {"u": u})
    _check_closed_modulus(k)

    if k == 0.0:
        return JacobiState(u, k, math.sin(u), math.cos(u), 1.0)
    if k == 1.0:
        sech = 1.0 / math.cosh(u)
        return JacobiState(u, k, math.tanh(u), sech, sech)

    sn, cn, dn, _ = _sncndn_amplitude(float(u), float(k))
    return JacobiState(u, k, sn, cn, dn)


def jacobi_amplitude(u: float, k: float) -> float:
    """Jacobi amplitude am(u, k), continuous in u"""
    if not (isinstance(u, (int, float)) and math.isfinite(u)):
        raise DomainError(f"Argument must be finite, got {u!r}", {"u": u})
    _check_closed_modulus(k)
    if k == 0.0:
        return float(u)
    if k == 1.0:
        return 2.0 * math.atan(math.exp(u)) - 0.5 * math.pi
    return _sncndn_amplitude(float(u), float(k))[3]


def _nearest_zero(u: float, k: float, letter: str) -> float:
    quarter = _quarter_period(k) if 0.0 < k < 1.0 else 0.5 * math.pi
    if letter == "s":
        return 2.0 * quarter * round(u / (2.0 * quarter))
    return quarter * (2.0 * round((u - quarter) / (2.0 * quarter)) + 1.0)


def _quotient(name: str, state: JacobiState, pole_tol: float = POLE_TOLERANCE) -> float:
    if name not in MINOR_FUNCTIONS:
        raise ParameterError(f"Unknown Jacobi function {name!r}; expected one of {', '.join(MINOR_FUNCTIONS)}")
    values = {"s": state.sn, "c": state.cn, "d": state.dn, "n": 1.0}
    numerator = values[name[0]]
    denominator = values[name[1]]
    if abs(denominator) <= pole_tol:
        nearest = _nearest_zero(state.u, state.k, name[1])
        raise PoleError(f"{name}({state.u!r}, {state.k!r}) is at a pole; nearest singular argument u={nearest!r}",
                        nearest=nearest, metadata={"function": name, "u": state.u, "k": state.k})
    return numerator / denominator


def jacobi_minor(name: str, u: float, k: float, pole_tol: float = POLE_TOLERANCE) -> float:
    """Quotient Jacobi function pq(u, k) = p(u)/q(u), with n = 1

    Raises:
        ParameterError: unknown function name
        PoleError: denominator vanishes at u; carries the nearest singular argument
    """
    return _quotient(name, jacobi_sncndn(u, k), pole_tol)


def sd(u: float, k: float) -> float:
    state = jacobi_sncndn(u, k)
    return state.sn / state.dn


def cd(u: float, k: float) -> float:
    state = jacobi_sncndn(u, k)
    return state.cn / state.dn


def nd(u: float, k: float) -> float:
    return 1.0 / jacobi_sncndn(u, k).dn


def ns(u: float, k: float) -> float:
    return jacobi_minor("ns", u, k)


def carlson_rf(x: float, y: float, z: float, max_iterations: int = 64) -> float:
    """Carlson's symmetric integral R_F(x, y, z) by duplication

    x, y, z >= 0 with at most one of them zero.
    """
    if min(x, y, z) < 0.0 or (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise DomainError(f"R_F needs non-negative arguments with at most one zero, got ({x}, {y}, {z})")

    x0, y0 = x, y
    a0 = (x + y + z) / 3.0
    q = (3.0 * MACHINE_EPS) ** (-1.0 / 8.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a = a0
    scale = 1.0
    for _ in range(max_iterations):
        if q < abs(a):
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        q *= 0.25
        scale *= 4.0
    else:
        raise NumericError("R_F duplication did not converge", estimate=q)

    dx = (a0 - x0) / (a * scale)
    dy = (a0 - y0) / (a * scale)
    dz = -(dx + dy)
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0
            + e3 * (1.0 / 14.0 + 3.0 * e3 / 104.0)
            + e2 * (-0.1 + e2 / 24.0 - 3.0 * e3 / 44.0 - 5.0 * e2 * e2 / 208.0 + e2 * e3 / 16.0)) / math.sqrt(a)


def incomplete_first_kind(phi: float, k: float) -> float:
    """Incomplete elliptic integral of the first kind F(phi, k), any real phi"""
    if not math.isfinite(phi):
        raise DomainError(f"Amplitude must be finite, got {phi!r}")
    _check_open_modulus(k)
    turns = round(phi / math.pi)
    reduced = phi - math.pi * turns
    s = math.sin(reduced)
    c = math.cos(reduced)
    value = s * carlson_rf(c * c, (1.0 - k * s) * (1.0 + k * s), 1.0) if s != 0.0 else 0.0
    return value + 2.0 * turns * _quarter_period(k)


def invert_sn(x: float, k: float) -> float:
    """Inverse of sn on [-K, K]: returns u with sn(u, k) = x

    Raises:
        DomainError: |x| > 1 or modulus outside (0, 1)
    """
    if not (isinstance(x, (int, float)) and math.isfinite(x) and abs(x) <= 1.0):
        raise DomainError(f"invert_sn needs |x| <= 1, got {x!r}", {"x": x})
    _check_open_modulus(k)
    if abs(x) == 1.0:
        return math.copysign(_quarter_period(k), x)

    u = incomplete_first_kind(math.asin(x), k)
    state = jacobi_sncndn(u, k)
    slope = state.cn * state.dn
    if abs(slope) > 1e-8:
        u -= (state.sn - x) / slope
    return u
