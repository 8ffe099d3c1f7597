#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: registry.py
# Pathname: /path/to/ideal4/src/catalog/
# Description: Family registry: build hypersurfaces by tag and parameter
# -----------------------------------------------------------------------------

import math
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from src.core.errors import ParameterError
from src.elliptic import HALF_SQUARE_MODULUS, SQRT_HALF
from src.geom.immersion import ChartBox, ImmersionMap
from src.catalog.families import (
    LATITUDE,
    PRODUCT_DOMAIN,
    family_a,
    family_b,
    family_c,
    generic_graph,
    hyperplane,
    product_L1,
    product_L2,
)

logger = logging.getLogger("FamilyRegistry")

SAFE_LONGITUDE = (-math.pi, math.pi)
UNIT = (-1.0, 1.0)


@dataclass(frozen=True)
class FamilyParams:
    """A family tag, its parameter and the chart box served to grids"""
    family: str
    a: Optional[float]
    safe_domain: ChartBox
    coeffs: Optional[Tuple[float, ...]] = None
    expect_ideal: bool = True

    def to_dict(self) -> Dict:
        return {
            "family": self.family,
            "a": self.a,
            "coeffs": list(self.coeffs) if self.coeffs is not None else None,
        }


@dataclass(frozen=True)
class FamilyEntry:
    tag: str
    description: str
    parameter: str
    default_a: Optional[float]
    builder: Callable = field(repr=False)
    safe_domain: Callable[[Optional[float]], ChartBox] = field(repr=False)
    expect_ideal: bool = True


def _c_safe(a: float) -> ChartBox:
    t_max = 2.0 * HALF_SQUARE_MODULUS.quarter_period
    return ChartBox.from_ranges((0.2 / a, (t_max - 0.2) / a), LATITUDE, SAFE_LONGITUDE)


FAMILIES: Dict[str, FamilyEntry] = {
    "a": FamilyEntry("a", "spherical cylinder over S^2(a)", "a > 0", 1.0,
                     lambda a, c: family_a(a),
                     lambda a: ChartBox.from_ranges(UNIT, LATITUDE, SAFE_LONGITUDE)),
    "b": FamilyEntry("b", "cone with nonzero curvature sqrt(1-a^2)/(a t)", "0 < a < 1", SQRT_HALF,
                     lambda a, c: family_b(a),
                     lambda a: ChartBox.from_ranges((0.2, 2.0), LATITUDE, SAFE_LONGITUDE)),
    "c": FamilyEntry("c", "Jacobi-elliptic hypersurface, sd(at)/a over S^2, modulus 1/sqrt(2)", "a > 0", 1.0,
                     lambda a, c: family_c(a),
                     _c_safe),
    "L1": FamilyEntry("L1", "catenoid times a line", "none", None,
                      lambda a, c: product_L1(),
                      lambda a: PRODUCT_DOMAIN.intersect(ChartBox.from_ranges(
                          (-math.inf, math.inf), (-math.inf, math.inf), UNIT))),
    "L2": FamilyEntry("L2", "helicoid times a line, isometric to L1", "none", None,
                      lambda a, c: product_L2(),
                      lambda a: PRODUCT_DOMAIN.intersect(ChartBox.from_ranges(
                          (-math.inf, math.inf), (-math.inf, math.inf), UNIT))),
    "hyperplane": FamilyEntry("hyperplane", "totally geodesic hyperplane x4 = 0", "none", None,
                              lambda a, c: hyperplane(),
                              lambda a: ChartBox.from_ranges(UNIT, UNIT, UNIT)),
    "graph": FamilyEntry("graph", "graph of c1 t^2 + c2 u^2 + c3 v^2 (negative control)", "--coeffs c1,c2,c3",
                         None,
                         lambda a, c: generic_graph(c),
                         lambda a: ChartBox.from_ranges(UNIT, UNIT, UNIT),
                         expect_ideal=False),
}

_ALIASES = {tag.lower(): tag for tag in FAMILIES}


def canonical_tag(tag: str) -> str:
    key = str(tag).strip().lower()
    if key not in _ALIASES:
        raise ParameterError(f"Unknown family {tag!r}; expected one of {', '.join(FAMILIES)}")
    return _ALIASES[key]


def build_family(tag: str, a: Optional[float] = None,
                 coeffs: Optional[Tuple[float, ...]] = None) -> Tuple[FamilyParams, ImmersionMap]:
    """Construct a family member

    Raises:
        ParameterError: unknown tag, parameter out of range or missing coefficients
    """
    entry = FAMILIES[canonical_tag(tag)]
    if entry.default_a is None:
        if a is not None:
            raise ParameterError(f"Family {entry.tag} takes no parameter a")
    elif a is None:
        a = entry.default_a
    if entry.tag == "graph":
        if coeffs is None:
            raise ParameterError("Family graph needs coefficients (--coeffs c1,c2,c3)")
        coeffs = tuple(float(c) for c in coeffs)
    elif coeffs is not None:
        raise ParameterError(f"Family {entry.tag} takes no coefficients")

    imm = entry.builder(a, coeffs)
    params = FamilyParams(entry.tag, a, entry.safe_domain(a), coeffs, entry.expect_ideal)
    logger.info(f"Built family {entry.tag} ({imm.name})")
    return params, imm


def list_families() -> List[Dict]:
    return [
        {"family": e.tag, "description": e.description, "parameter": e.parameter,
         "default_a": e.default_a, "ideal": e.expect_ideal}
        for e in FAMILIES.values()
    ]
