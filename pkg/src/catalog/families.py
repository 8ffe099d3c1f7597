#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: families.py
# Pathname: /path/to/ideal4/src/catalog/
# Description: Hypersurfaces of E^4 with analytic partials: the spherical
#              cylinder, the cone and the Jacobi-elliptic family, the
#              catenoid and helicoid products, hyperplane and polynomial
#              graphs
# -----------------------------------------------------------------------------

import bisect
import math
import logging
from typing import Dict, Mapping, Optional, Protocol, Sequence, Tuple, Union

import numpy as np

from src.core.errors import DomainError, ParameterError
from src.elliptic import HALF_SQUARE_MODULUS, SQRT_HALF, integrate_adaptive, jacobi_sncndn
from src.elliptic.quadrature import DEFAULT_TOLERANCE
from src.geom.immersion import ChartBox, ChartPoint, ImmersionMap

# Distance kept from u = +-pi/2 where the spherical chart breaks down
LATITUDE_GUARD = 0.1
# Distance kept from the cone apex and from the zeros of sd
PROFILE_GUARD = 0.05
CHECKPOINTS = 32

LATITUDE = (-0.5 * math.pi + LATITUDE_GUARD, 0.5 * math.pi - LATITUDE_GUARD)
LONGITUDE = (-2.0 * math.pi, 2.0 * math.pi)


class Profile(Protocol):
    """Meridian curve (phi(t), rho(t)) of a rotation hypersurface"""

    def axial(self, t: float) -> float:
        ...

    def derivatives(self, t: float) -> Tuple[float, float, float, float, float]:
        """(phi', phi'', rho, rho', rho'') at t"""
        ...


class LinearProfile:
    """phi = slope t, rho = radius + radius_slope t"""

    def __init__(self, slope: float, radius: float, radius_slope: float):
        self.slope = slope
        self.radius = radius
        self.radius_slope = radius_slope

    def axial(self, t: float) -> float:
        return self.slope * t

    def derivatives(self, t: float):
        return self.slope, 0.0, self.radius + self.radius_slope * t, self.radius_slope, 0.0


def _sphere(u: float, v: float):
    """Unit sphere S(u, v) = (sin u, cos u sin v, cos u cos v) and its partials"""
    su, cu = math.sin(u), math.cos(u)
    sv, cv = math.sin(v), math.cos(v)
    S = np.array([su, cu * sv, cu * cv])
    S_u = np.array([cu, -su * sv, -su * cv])
    S_v = np.array([0.0, cu * cv, -cu * sv])
    S_uv = np.array([0.0, -su * cv, su * sv])
    S_vv = np.array([0.0, -cu * sv, -cu * cv])
    return S, S_u, S_v, -S, S_uv, S_vv


class SphericalProfile:
    """Rotation hypersurface (phi(t), rho(t) S(u, v)) with the axis in one ambient slot"""

    def __init__(self, profile: Profile, axis: int):
        if axis not in (0, 3):
            raise ParameterError(f"Profile axis must be the first or last slot, got {axis}")
        self.profile = profile
        self.axis = axis
        self.sphere_slots = [i for i in range(4) if i != axis]

    def _embed(self, axial: float, radial: np.ndarray) -> np.ndarray:
        out = np.empty(4)
        out[self.axis] = axial
        out[self.sphere_slots] = radial
        return out

    def position(self, p: ChartPoint) -> np.ndarray:
        rho = self.profile.derivatives(p.t)[2]
        S = _sphere(p.u, p.v)[0]
        return self._embed(self.profile.axial(p.t), rho * S)

    def first_partials(self, p: ChartPoint) -> np.ndarray:
        dphi, _, rho, drho, _ = self.profile.derivatives(p.t)
        S, S_u, S_v = _sphere(p.u, p.v)[:3]
        return np.array([
            self._embed(dphi, drho * S),
            self._embed(0.0, rho * S_u),
            self._embed(0.0, rho * S_v),
        ])

    def second_partials(self, p: ChartPoint) -> np.ndarray:
        _, ddphi, rho, drho, ddrho = self.profile.derivatives(p.t)
        S, S_u, S_v, S_uu, S_uv, S_vv = _sphere(p.u, p.v)
        tt = self._embed(ddphi, ddrho * S)
        tu = self._embed(0.0, drho * S_u)
        tv = self._embed(0.0, drho * S_v)
        uu = self._embed(0.0, rho * S_uu)
        uv = self._embed(0.0, rho * S_uv)
        vv = self._embed(0.0, rho * S_vv)
        return np.array([[tt, tu, tv], [tu, uu, uv], [tv, uv, vv]])

    def immersion(self, name: str, domain: ChartBox) -> ImmersionMap:
        return ImmersionMap(name, domain, self.position, self.first_partials, self.second_partials)


def _positive(a: float, family: str) -> float:
    if not (isinstance(a, (int, float)) and math.isfinite(a) and a > 0.0):
        raise ParameterError(f"Family {family} needs a > 0, got {a!r}", {"family": family, "a": a})
    return float(a)


def family_a(a: float = 1.0) -> ImmersionMap:
    """Spherical cylinder (t, a sin u, a cos u sin v, a cos u cos v)"""
    a = _positive(a, "a")
    profile = SphericalProfile(LinearProfile(1.0, a, 0.0), axis=0)
    domain = ChartBox.from_ranges((-math.inf, math.inf), LATITUDE, LONGITUDE)
    return profile.immersion(f"a(a={a:g})", domain)


def family_b(a: float = SQRT_HALF) -> ImmersionMap:
    """Cone (sqrt(1-a^2) t, a t sin u, a t cos u sin v, a t cos u cos v), 0 < a < 1"""
    if not (isinstance(a, (int, float)) and math.isfinite(a) and 0.0 < a < 1.0):
        raise ParameterError(f"Family b needs 0 < a < 1, got {a!r}; a = 0 and a = 1 are degenerate",
                             {"family": "b", "a": a})
    a = float(a)
    axial = math.sqrt((1.0 - a) * (1.0 + a))
    profile = SphericalProfile(LinearProfile(axial, 0.0, a), axis=0)
    domain = ChartBox.from_ranges((PROFILE_GUARD, math.inf), LATITUDE, LONGITUDE)
    return profile.immersion(f"b(a={a:g})", domain)


def cone_mean_curvature(a: float, t: float) -> float:
    """Nonzero principal curvature sqrt(1 - a^2) / (a t) of the cone"""
    if not 0.0 < a < 1.0:
        raise ParameterError(f"Family b needs 0 < a < 1, got {a!r}")
    if not t > 0.0:
        raise DomainError(f"Cone curvature needs t > 0, got {t!r}")
    return math.sqrt((1.0 - a) * (1.0 + a)) / (a * t)


class EllipticProfile:
    """Profile of the Jacobi-elliptic family with modulus 1/sqrt(2)

    rho(t) = sd(at)/a, phi(t) = 1/2 int_0^t sd^2(as) ds. The integral is
    checkpointed on a fixed set of knots built at construction.
    """

    def __init__(self, a: float, tol: float = DEFAULT_TOLERANCE, checkpoints: int = CHECKPOINTS):
        self.logger = logging.getLogger("EllipticProfile")
        self.a = a
        self.modulus = HALF_SQUARE_MODULUS
        self.k = self.modulus.k
        self.t_max = 2.0 * self.modulus.quarter_period / a
        self.tol = tol
        self.knots = list(np.linspace(0.0, self.t_max, checkpoints + 1))
        self.cumulative = [0.0]
        piece_tol = tol / checkpoints
        for lo, hi in zip(self.knots[:-1], self.knots[1:]):
            self.cumulative.append(self.cumulative[-1] + integrate_adaptive(self._half_sd2, lo, hi, piece_tol).value)
        self.logger.debug(f"Built {checkpoints} checkpoints for a={a:g}")

    def _half_sd2(self, s: float) -> float:
        state = jacobi_sncndn(self.a * s, self.k)
        return 0.5 * (state.sn / state.dn) ** 2

    def axial(self, t: float) -> float:
        i = min(max(bisect.bisect_right(self.knots, t) - 1, 0), len(self.knots) - 2)
        return self.cumulative[i] + integrate_adaptive(self._half_sd2, self.knots[i], t,
                                                       self.tol / len(self.knots)).value

    def derivatives(self, t: float):
        a = self.a
        k2 = self.k * self.k
        state = jacobi_sncndn(a * t, self.k)
        sn, cn, dn = state.sn, state.cn, state.dn
        sd = sn / dn
        rho = sd / a
        drho = cn / (dn * dn)
        ddrho = a * sn * (2.0 * k2 * cn * cn - dn * dn) / dn ** 3
        dphi = 0.5 * sd * sd
        ddphi = a * sd * cn / (dn * dn)
        return dphi, ddphi, rho, drho, ddrho


def family_c(a: float = 1.0, tol: float = DEFAULT_TOLERANCE) -> ImmersionMap:
    """(sd(at)/a S(u, v), 1/2 int_0^t sd^2(as) ds) with modulus 1/sqrt(2)"""
    a = _positive(a, "c")
    profile = EllipticProfile(a, tol)
    domain = ChartBox.from_ranges((PROFILE_GUARD / a, profile.t_max - PROFILE_GUARD / a), LATITUDE, LONGITUDE)
    return SphericalProfile(profile, axis=3).immersion(f"c(a={a:g})", domain)


def lambda_profile(a: float, t: float) -> float:
    """lambda(t) = (a/2) sd(at, 1/sqrt(2)), the repeated principal curvature of family c"""
    a = _positive(a, "c")
    x = a * t
    if not (math.isfinite(x) and 0.0 < x < 2.0 * HALF_SQUARE_MODULUS.quarter_period):
        raise DomainError(f"lambda_profile needs 0 < a t < 2K, got a t = {x!r}", {"a": a, "t": t})
    state = jacobi_sncndn(x, HALF_SQUARE_MODULUS.k)
    return 0.5 * a * state.sn / state.dn


def _catenoid(p: ChartPoint):
    s, t = p.x1, p.x2
    ch, sh = math.cosh(s), math.sinh(s)
    c, n = math.cos(t), math.sin(t)
    position = np.array([ch * c, ch * n, s, p.x3])
    first = np.array([[sh * c, sh * n, 1.0, 0.0],
                      [-ch * n, ch * c, 0.0, 0.0],
                      [0.0, 0.0, 0.0, 1.0]])
    second = np.zeros((3, 3, 4))
    second[0, 0] = [ch * c, ch * n, 0.0, 0.0]
    second[0, 1] = second[1, 0] = [-sh * n, sh * c, 0.0, 0.0]
    second[1, 1] = [-ch * c, -ch * n, 0.0, 0.0]
    return position, first, second


def _helicoid(p: ChartPoint):
    s, t = p.x1, p.x2
    ch, sh = math.cosh(s), math.sinh(s)
    c, n = math.cos(t), math.sin(t)
    position = np.array([sh * c, sh * n, t, p.x3])
    first = np.array([[ch * c, ch * n, 0.0, 0.0],
                      [-sh * n, sh * c, 1.0, 0.0],
                      [0.0, 0.0, 0.0, 1.0]])
    second = np.zeros((3, 3, 4))
    second[0, 0] = [sh * c, sh * n, 0.0, 0.0]
    second[0, 1] = second[1, 0] = [-ch * n, ch * c, 0.0, 0.0]
    second[1, 1] = [-sh * c, -sh * n, 0.0, 0.0]
    return position, first, second


PRODUCT_DOMAIN = ChartBox.from_ranges((-math.asinh(1.0), math.asinh(1.0)), (0.0, 2.0 * math.pi),
                                      (-math.inf, math.inf))


def _from_closed_form(name: str, formula) -> ImmersionMap:
    return ImmersionMap(name, PRODUCT_DOMAIN,
                        lambda p: formula(p)[0], lambda p: formula(p)[1], lambda p: formula(p)[2])


def product_L1() -> ImmersionMap:
    """Catenoid times a line: (cosh s cos t, cosh s sin t, s, x)"""
    return _from_closed_form("L1", _catenoid)


def product_L2() -> ImmersionMap:
    """Helicoid times a line in the catenoid's chart: (sinh s cos t, sinh s sin t, t, x)"""
    return _from_closed_form("L2", _helicoid)


def hyperplane() -> ImmersionMap:
    zero = np.zeros((3, 3, 4))
    frame = np.eye(3, 4)
    return ImmersionMap("hyperplane", ChartBox.unbounded(),
                        lambda p: np.array([p.x1, p.x2, p.x3, 0.0]),
                        lambda p: frame.copy(), lambda p: zero.copy())


Coefficients = Union[Sequence[float], Mapping[Tuple[int, int, int], float]]


def _monomials(coeffs: Coefficients) -> Dict[Tuple[int, int, int], float]:
    if isinstance(coeffs, Mapping):
        terms = {}
        for powers, c in coeffs.items():
            powers = tuple(int(e) for e in powers)
            if len(powers) != 3 or min(powers) < 0:
                raise ParameterError(f"Monomial exponents must be three non-negative integers, got {powers}")
            terms[powers] = float(c)
    else:
        values = [float(c) for c in coeffs]
        if len(values) != 3:
            raise ParameterError(f"Quadratic graph needs 3 coefficients, got {len(values)}")
        terms = {(2, 0, 0): values[0], (0, 2, 0): values[1], (0, 0, 2): values[2]}
    for c in terms.values():
        if not math.isfinite(c):
            raise ParameterError(f"Graph coefficients must be finite, got {c!r}")
    return terms


def generic_graph(coeffs: Coefficients, name: Optional[str] = None) -> ImmersionMap:
    """Graph (t, u, v, P(t, u, v)) of a polynomial

    Args:
        coeffs: (c1, c2, c3) for P = c1 t^2 + c2 u^2 + c3 v^2, or a mapping
            {(i, j, k): c} for P = sum c t^i u^j v^k
    """
    terms = _monomials(coeffs)

    def program(t, u, v):
        total = 0.0
        for (i, j, k), c in terms.items():
            total = total + c * (t ** i) * (u ** j) * (v ** k)
        return t, u, v, total

    return ImmersionMap.from_program(program, ChartBox.unbounded(), name or "graph")


def random_graph(rng: np.random.Generator, degree: int = 3, scale: float = 1.0) -> ImmersionMap:
    """Graph of a random polynomial with monomials of total degree 2..degree"""
    if degree < 2:
        raise ParameterError(f"Random graph degree must be at least 2, got {degree}")
    terms = {}
    for total in range(2, degree + 1):
        for i in range(total + 1):
            for j in range(total - i + 1):
                terms[(i, j, total - i - j)] = float(scale * rng.normal())
    return generic_graph(terms, name=f"random_graph(deg={degree})")
