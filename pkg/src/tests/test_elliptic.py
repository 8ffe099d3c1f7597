#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: test_elliptic.py
# Pathname: /path/to/ideal4/src/tests/
# Description: Tests for Jacobi elliptic functions, elliptic integrals and
#              adaptive quadrature
# -----------------------------------------------------------------------------

import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from src.core.errors import DomainError, NumericError, ParameterError, PoleError
from src.elliptic import (
    HALF_SQUARE_MODULUS,
    MINOR_FUNCTIONS,
    SQRT_HALF,
    EllipticModulus,
    agm,
    carlson_rf,
    complete_quarter_period,
    incomplete_first_kind,
    integrate_adaptive,
    invert_sn,
    jacobi_amplitude,
    jacobi_minor,
    jacobi_sncndn,
    quarter_period_by_quadrature,
)

arguments = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
moduli = st.floats(min_value=0.05, max_value=0.95, allow_nan=False)


# --- quarter period -----------------------------------------------------------

def test_quarter_period_small_modulus_limit():
    assert complete_quarter_period(1e-8) == pytest.approx(0.5 * math.pi, abs=1e-12)


def test_quarter_period_half_square_modulus():
    K = complete_quarter_period(SQRT_HALF)
    assert K == pytest.approx(1.854074677, abs=1e-8)
    assert K == pytest.approx(quarter_period_by_quadrature(SQRT_HALF, 1e-12), abs=1e-10)
    assert K == pytest.approx(special.ellipk(0.5), abs=1e-13)


def test_quarter_period_is_increasing():
    assert complete_quarter_period(0.3) < complete_quarter_period(0.6) < complete_quarter_period(0.9)


@pytest.mark.parametrize("k", [0.0, 1.0, -0.2, 1.5, math.nan])
def test_quarter_period_rejects_closed_moduli(k):
    with pytest.raises(DomainError):
        complete_quarter_period(k)


def test_quarter_period_rejects_bad_tolerance():
    with pytest.raises(ParameterError):
        complete_quarter_period(0.5, tol=0.0)


def test_modulus_from_kprime():
    m = EllipticModulus.from_kprime(SQRT_HALF)
    assert m.k * m.k + m.kprime * m.kprime == pytest.approx(1.0, abs=1e-14)
    assert m.k == pytest.approx(SQRT_HALF, abs=1e-15)
    assert m.period == pytest.approx(4.0 * m.quarter_period)
    assert HALF_SQUARE_MODULUS.quarter_period == pytest.approx(m.quarter_period)


def test_agm_gauss_constant():
    assert agm(1.0, math.sqrt(2.0)) == pytest.approx(1.1981402347355922, abs=1e-14)


def test_agm_rejects_non_positive():
    with pytest.raises(DomainError):
        agm(1.0, 0.0)


def test_agm_stall_is_logged(caplog):
    with caplog.at_level("ERROR", logger="Jacobi"):
        with pytest.raises(NumericError) as info:
            agm(1.0, 2.0, max_iterations=1)
    assert info.value.estimate > 0.0
    assert "AGM stalled" in caplog.text


# --- sn, cn, dn ---------------------------------------------------------------

@pytest.mark.parametrize("k", [0.1, 0.5, SQRT_HALF, 0.9])
def test_values_at_zero(k):
    s = jacobi_sncndn(0.0, k)
    assert (s.sn, s.cn, s.dn) == (0.0, 1.0, 1.0)


@pytest.mark.parametrize("k", [0.2, SQRT_HALF, 0.9])
def test_sn_reaches_one_at_quarter_period(k):
    s = jacobi_sncndn(complete_quarter_period(k), k)
    assert s.sn == pytest.approx(1.0, abs=1e-9)
    assert s.cn == pytest.approx(0.0, abs=1e-7)
    assert s.dn == pytest.approx(math.sqrt(1.0 - k * k), abs=1e-9)


@pytest.mark.parametrize("u", [-2.0, 0.3, 1.7, 5.0])
def test_trigonometric_limit(u):
    exact = jacobi_sncndn(u, 0.0)
    assert (exact.sn, exact.cn, exact.dn) == (math.sin(u), math.cos(u), 1.0)
    near = jacobi_sncndn(u, 1e-6)
    assert near.sn == pytest.approx(math.sin(u), abs=1e-11)
    assert near.cn == pytest.approx(math.cos(u), abs=1e-11)


def test_hyperbolic_limit():
    s = jacobi_sncndn(0.8, 1.0)
    assert s.sn == pytest.approx(math.tanh(0.8))
    assert s.cn == pytest.approx(1.0 / math.cosh(0.8))
    assert s.dn == pytest.approx(1.0 / math.cosh(0.8))


@pytest.mark.parametrize("u", [-1.5, 0.4, 2.0])
def test_near_hyperbolic_modulus_matches_scipy(u):
    m = 1.0 - 1e-11
    sn, cn, dn, _ = special.ellipj(u, m)
    s = jacobi_sncndn(u, math.sqrt(m))
    assert s.sn == pytest.approx(sn, abs=1e-9)
    assert s.cn == pytest.approx(cn, abs=1e-9)
    assert s.dn == pytest.approx(dn, abs=1e-9)


@pytest.mark.parametrize("u", [math.inf, -math.inf, math.nan])
def test_non_finite_argument(u):
    with pytest.raises(DomainError):
        jacobi_sncndn(u, 0.5)


@pytest.mark.parametrize("k", [-0.1, 1.1])
def test_modulus_outside_closed_interval(k):
    with pytest.raises(DomainError):
        jacobi_sncndn(0.5, k)


@settings(max_examples=1000, deadline=None)
@given(arguments, moduli)
def test_matches_scipy_oracle(u, k):
    sn, cn, dn, _ = special.ellipj(u, k * k)
    s = jacobi_sncndn(u, k)
    assert s.sn == pytest.approx(sn, abs=1e-11)
    assert s.cn == pytest.approx(cn, abs=1e-11)
    assert s.dn == pytest.approx(dn, abs=1e-11)


@settings(max_examples=1000, deadline=None)
@given(arguments, moduli)
def test_quadratic_identities(u, k):
    s = jacobi_sncndn(u, k)
    k2 = k * k
    kp2 = (1.0 - k) * (1.0 + k)
    assert abs(s.sn ** 2 + s.cn ** 2 - 1.0) <= 1e-11
    assert abs(s.dn ** 2 + k2 * s.sn ** 2 - 1.0) <= 1e-11
    assert abs(s.dn ** 2 - k2 * s.cn ** 2 - kp2) <= 1e-11
    assert s.dn >= math.sqrt(kp2) - 1e-15


@settings(max_examples=1000, deadline=None)
@given(arguments, moduli)
def test_derivative_laws(u, k):
    h = 1e-5
    lo, mid, hi = jacobi_sncndn(u - h, k), jacobi_sncndn(u, k), jacobi_sncndn(u + h, k)
    assert abs((hi.sn - lo.sn) / (2 * h) - mid.cn * mid.dn) <= 1e-6
    assert abs((hi.cn - lo.cn) / (2 * h) + mid.sn * mid.dn) <= 1e-6
    assert abs((hi.dn - lo.dn) / (2 * h) + k * k * mid.sn * mid.cn) <= 1e-6


@settings(max_examples=300, deadline=None)
@given(arguments, moduli)
def test_parity(u, k):
    plus, minus = jacobi_sncndn(u, k), jacobi_sncndn(-u, k)
    assert abs(plus.sn + minus.sn) <= 1e-12
    assert abs(plus.cn - minus.cn) <= 1e-12
    assert abs(plus.dn - minus.dn) <= 1e-12


@settings(max_examples=300, deadline=None)
@given(arguments, moduli)
def test_sd_is_periodic(u, k):
    period = 4.0 * complete_quarter_period(k)
    assert abs(jacobi_minor("sd", u + period, k) - jacobi_minor("sd", u, k)) <= 1e-9


def test_periodic_extension_far_from_origin():
    k = 0.6
    K = complete_quarter_period(k)
    far = jacobi_sncndn(0.37 + 40.0 * K, k)
    near = jacobi_sncndn(0.37, k)
    assert far.sn == pytest.approx(near.sn, abs=1e-10)
    assert far.cn == pytest.approx(near.cn, abs=1e-10)


def test_amplitude():
    k = 0.7
    K = complete_quarter_period(k)
    assert jacobi_amplitude(K, k) == pytest.approx(0.5 * math.pi, abs=1e-12)
    assert jacobi_amplitude(0.5 + 4.0 * K, k) == pytest.approx(jacobi_amplitude(0.5, k) + 2.0 * math.pi,
                                                                abs=1e-10)
    assert math.sin(jacobi_amplitude(0.9, k)) == pytest.approx(jacobi_sncndn(0.9, k).sn, abs=1e-14)


# --- minor functions ----------------------------------------------------------

def test_minor_examples():
    K = HALF_SQUARE_MODULUS.quarter_period
    assert jacobi_minor("sd", 0.0, 0.4) == 0.0
    assert jacobi_minor("cd", 0.0, 0.4) == 1.0
    assert jacobi_minor("sd", K, SQRT_HALF) == pytest.approx(math.sqrt(2.0), abs=1e-10)
    assert jacobi_minor("nd", K, SQRT_HALF) == pytest.approx(math.sqrt(2.0), abs=1e-10)


@pytest.mark.parametrize("name", MINOR_FUNCTIONS)
def test_minor_is_quotient(name):
    u, k = 0.83, 0.45
    s = jacobi_sncndn(u, k)
    values = {"s": s.sn, "c": s.cn, "d": s.dn, "n": 1.0}
    assert jacobi_minor(name, u, k) == pytest.approx(values[name[0]] / values[name[1]], rel=1e-14)
    assert s.minor(name) == jacobi_minor(name, u, k)


def test_ns_pole_at_zero():
    with pytest.raises(PoleError) as info:
        jacobi_minor("ns", 0.0, 0.5)
    assert info.value.nearest == 0.0
    assert info.value.code == "pole_error"


def test_ns_pole_at_half_period():
    k = 0.5
    K = complete_quarter_period(k)
    with pytest.raises(PoleError) as info:
        jacobi_minor("ns", 2.0 * K, k, pole_tol=1e-10)
    assert info.value.nearest == pytest.approx(2.0 * K, abs=1e-12)


def test_nc_pole_at_quarter_period():
    k = 0.5
    K = complete_quarter_period(k)
    with pytest.raises(PoleError) as info:
        jacobi_minor("nc", K, k, pole_tol=1e-7)
    assert info.value.nearest == pytest.approx(K, abs=1e-12)


def test_unknown_minor():
    with pytest.raises(ParameterError):
        jacobi_minor("xy", 0.3, 0.5)


# --- inverse and incomplete integral -----------------------------------------

def test_invert_sn_examples():
    k = 0.7
    assert invert_sn(0.0, k) == 0.0
    assert invert_sn(1.0, k) == pytest.approx(complete_quarter_period(k), abs=1e-14)
    assert invert_sn(-1.0, k) == pytest.approx(-complete_quarter_period(k), abs=1e-14)
    assert jacobi_sncndn(invert_sn(0.4, k), k).sn == pytest.approx(0.4, abs=1e-10)


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=-0.999, max_value=0.999), moduli)
def test_invert_sn_round_trip_and_oddness(x, k):
    u = invert_sn(x, k)
    assert abs(u) <= complete_quarter_period(k) + 1e-12
    assert abs(jacobi_sncndn(u, k).sn - x) <= 1e-10
    assert invert_sn(-x, k) == pytest.approx(-u, abs=1e-12)


@pytest.mark.parametrize("x", [1.0001, -2.0, math.nan])
def test_invert_sn_outside_range(x):
    with pytest.raises(DomainError):
        invert_sn(x, 0.5)


@pytest.mark.parametrize("phi", [-4.0, -0.3, 0.0, 1.2, 2.9, 7.5])
def test_incomplete_integral_matches_scipy(phi):
    k = 0.8
    assert incomplete_first_kind(phi, k) == pytest.approx(special.ellipkinc(phi, k * k), abs=1e-12)


def test_incomplete_integral_at_right_angle():
    assert incomplete_first_kind(0.5 * math.pi, 0.3) == pytest.approx(complete_quarter_period(0.3), abs=1e-13)


def test_carlson_rf_known_values():
    assert carlson_rf(1.0, 1.0, 1.0) == pytest.approx(1.0, abs=1e-15)
    assert carlson_rf(0.0, 1.0, 2.0) == pytest.approx(1.3110287771460599, abs=1e-13)
    with pytest.raises(DomainError):
        carlson_rf(0.0, 0.0, 1.0)


@settings(max_examples=300, deadline=None)
@given(st.floats(min_value=0.0, max_value=50.0), st.floats(min_value=1e-3, max_value=50.0),
       st.floats(min_value=1e-3, max_value=50.0))
def test_carlson_rf_matches_scipy(x, y, z):
    assert carlson_rf(x, y, z) == pytest.approx(special.elliprf(x, y, z), rel=1e-12)


@pytest.mark.parametrize("x, y, z", [(0.0, 1.0, 2.0), (0.5, 3.0, 1e-2), (4.0, 0.1, 9.0)])
def test_carlson_rf_is_symmetric(x, y, z):
    value = carlson_rf(x, y, z)
    for args in ((y, z, x), (z, x, y), (y, x, z)):
        assert carlson_rf(*args) == pytest.approx(value, rel=1e-13)


# --- quadrature ---------------------------------------------------------------

def test_integrate_examples():
    assert integrate_adaptive(lambda t: t, 0.0, 1.0).value == pytest.approx(0.5, abs=1e-12)
    result = integrate_adaptive(math.sin, 0.0, math.pi)
    assert result.value == pytest.approx(2.0, abs=1e-10)
    assert result.error <= 1e-10
    assert result.evaluations > 3


def test_integrate_reversed_and_empty_interval():
    assert integrate_adaptive(math.exp, 1.0, 0.0).value == pytest.approx(1.0 - math.e, abs=1e-10)
    assert integrate_adaptive(math.exp, 2.0, 2.0).value == 0.0


def test_integrate_is_deterministic():
    f = lambda t: math.cos(3.0 * t) * math.exp(-t)  # noqa: E731
    assert integrate_adaptive(f, 0.0, 4.0) == integrate_adaptive(f, 0.0, 4.0)


def test_quadrature_path_matches_agm_path():
    half = lambda theta: 1.0 / math.sqrt(1.0 - 0.5 * math.sin(theta) ** 2)  # noqa: E731
    value = integrate_adaptive(half, 0.0, 0.5 * math.pi, 1e-12).value
    assert value == pytest.approx(complete_quarter_period(SQRT_HALF), abs=1e-11)


def test_integrate_errors():
    with pytest.raises(ParameterError):
        integrate_adaptive(math.sin, 0.0, 1.0, tol=0.0)
    with pytest.raises(ParameterError):
        integrate_adaptive(math.sin, 0.0, math.inf)
    with pytest.raises(DomainError):
        integrate_adaptive(lambda t: math.nan, 0.0, 1.0)


def test_integrate_budget_exhausted():
    with pytest.raises(NumericError) as info:
        integrate_adaptive(lambda t: math.sin(40.0 * t), 0.0, 10.0, tol=1e-13, max_subdivisions=2)
    assert math.isfinite(info.value.estimate)
    assert info.value.metadata["estimate"] == info.value.estimate
