"""Jacobi elliptic functions, elliptic integrals and adaptive quadrature"""

from src.elliptic.quadrature import QuadratureResult, integrate_adaptive
from src.elliptic.jacobi import (
    EllipticModulus,
    JacobiState,
    MINOR_FUNCTIONS,
    SQRT_HALF,
    agm,
    carlson_rf,
    complete_quarter_period,
    incomplete_first_kind,
    invert_sn,
    jacobi_amplitude,
    jacobi_minor,
    jacobi_sncndn,
    quarter_period_by_quadrature,
)

# k = k' = 1/sqrt(2): the modulus of the Jacobi-elliptic ideal family
HALF_SQUARE_MODULUS = EllipticModulus.from_kprime(SQRT_HALF)

__all__ = [
    "EllipticModulus", "HALF_SQUARE_MODULUS", "JacobiState", "MINOR_FUNCTIONS",
    "QuadratureResult", "SQRT_HALF", "agm", "carlson_rf", "complete_quarter_period",
    "incomplete_first_kind", "integrate_adaptive", "invert_sn", "jacobi_amplitude",
    "jacobi_minor", "jacobi_sncndn", "quarter_period_by_quadrature",
]
