#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: immersion.py
# Pathname: /path/to/ideal4/src/geom/
# Description: Chart points, open chart boxes and chart-parametrized maps
#              from 3-space into Euclidean 4-space with their partials
# -----------------------------------------------------------------------------

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from src.core.errors import DomainError, ParameterError
from src.geom.hyperdual import HyperDual


@dataclass(frozen=True)
class ChartPoint:
    """Chart coordinates (t, u, v) of a point"""
    x1: float
    x2: float
    x3: float

    @classmethod
    def of(cls, values: Union["ChartPoint", Sequence[float], np.ndarray]) -> "ChartPoint":
        if isinstance(values, ChartPoint):
            return values
        coords = [float(c) for c in values]
        if len(coords) != 3:
            raise ParameterError(f"Chart point needs 3 coordinates, got {len(coords)}")
        return cls(*coords)

    @property
    def t(self) -> float:
        return self.x1

    @property
    def u(self) -> float:
        return self.x2

    @property
    def v(self) -> float:
        return self.x3

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3], dtype=float)

    def shifted(self, axis: int, offset: float) -> "ChartPoint":
        coords = [self.x1, self.x2, self.x3]
        coords[axis] += offset
        return ChartPoint(*coords)

    def is_finite(self) -> bool:
        return all(math.isfinite(c) for c in (self.x1, self.x2, self.x3))


PointLike = Union[ChartPoint, Sequence[float], np.ndarray]


@dataclass(frozen=True)
class ChartBox:
    """Open box lower < x < upper in chart space; sides may be infinite"""
    lower: Tuple[float, float, float]
    upper: Tuple[float, float, float]

    def __post_init__(self):
        if len(self.lower) != 3 or len(self.upper) != 3:
            raise ParameterError("Chart box needs three lower and three upper bounds")
        for lo, hi in zip(self.lower, self.upper):
            if math.isnan(lo) or math.isnan(hi) or not lo < hi:
                raise ParameterError(f"Empty chart box side ({lo}, {hi})")

    @classmethod
    def from_ranges(cls, *ranges: Tuple[float, float]) -> "ChartBox":
        return cls(tuple(float(r[0]) for r in ranges), tuple(float(r[1]) for r in ranges))

    @classmethod
    def unbounded(cls) -> "ChartBox":
        return cls((-math.inf,) * 3, (math.inf,) * 3)

    def ranges(self) -> Tuple[Tuple[float, float], ...]:
        return tuple(zip(self.lower, self.upper))

    def contains(self, point: PointLike) -> bool:
        p = ChartPoint.of(point)
        coords = (p.x1, p.x2, p.x3)
        return all(lo < c < hi for c, lo, hi in zip(coords, self.lower, self.upper))

    def shrink(self, fraction: float) -> "ChartBox":
        """Move every finite side inward by fraction/2 of its axis width"""
        if not 0.0 <= fraction < 1.0:
            raise ParameterError(f"Shrink fraction must lie in [0, 1), got {fraction!r}")
        lower, upper = [], []
        for lo, hi in zip(self.lower, self.upper):
            if math.isfinite(lo) and math.isfinite(hi):
                margin = 0.5 * fraction * (hi - lo)
                lo, hi = lo + margin, hi - margin
            lower.append(lo)
            upper.append(hi)
        return ChartBox(tuple(lower), tuple(upper))

    def intersect(self, other: "ChartBox") -> "ChartBox":
        lower = tuple(max(a, b) for a, b in zip(self.lower, other.lower))
        upper = tuple(min(a, b) for a, b in zip(self.upper, other.upper))
        for lo, hi in zip(lower, upper):
            if not lo < hi:
                raise DomainError(f"Chart boxes do not overlap: {self} and {other}")
        return ChartBox(lower, upper)

    def replace_axis(self, axis: int, lo: float, hi: float) -> "ChartBox":
        lower = list(self.lower)
        upper = list(self.upper)
        lower[axis], upper[axis] = float(lo), float(hi)
        return ChartBox(tuple(lower), tuple(upper))

    def is_finite(self) -> bool:
        return all(math.isfinite(c) for c in self.lower + self.upper)

    def axes(self, shape: Sequence[int]) -> Tuple[np.ndarray, ...]:
        """Grid nodes per axis, endpoints included; a single node sits at the midpoint"""
        if not self.is_finite():
            raise DomainError(f"Cannot grid an unbounded chart box {self}")
        result = []
        for n, lo, hi in zip(shape, self.lower, self.upper):
            if n < 1:
                raise ParameterError(f"Grid axis needs at least one node, got {n}")
            if n == 1:
                result.append(np.array([0.5 * (lo + hi)]))
            else:
                result.append(np.linspace(lo, hi, n))
        return tuple(result)


class ImmersionMap:
    """Chart-parametrized map from an open box into E^4 with its partials

    Args:
        name: Display name
        domain: Chart box on which the map is evaluated
        position: p -> 4-vector L(p)
        first_partials: p -> (3, 4) array, row i is dL/dx^i
        second_partials: p -> (3, 3, 4) array, [i, j] is d^2L/dx^i dx^j
    """

    def __init__(self, name: str, domain: ChartBox,
                 position: Callable[[ChartPoint], np.ndarray],
                 first_partials: Callable[[ChartPoint], np.ndarray],
                 second_partials: Callable[[ChartPoint], np.ndarray]):
        self.name = name
        self.domain = domain
        self._position = position
        self._first = first_partials
        self._second = second_partials

    def __repr__(self) -> str:
        return f"ImmersionMap({self.name!r}, domain={self.domain})"

    def _point(self, point: PointLike) -> ChartPoint:
        p = ChartPoint.of(point)
        if not p.is_finite():
            raise DomainError(f"Chart point {p} is not finite")
        if not self.domain.contains(p):
            raise DomainError(f"Chart point {p} lies outside the domain of {self.name}",
                              {"point": [p.x1, p.x2, p.x3], "immersion": self.name})
        return p

    def position(self, point: PointLike) -> np.ndarray:
        return np.asarray(self._position(self._point(point)), dtype=float)

    def first_partials(self, point: PointLike) -> np.ndarray:
        return np.asarray(self._first(self._point(point)), dtype=float)

    def second_partials(self, point: PointLike) -> np.ndarray:
        return np.asarray(self._second(self._point(point)), dtype=float)

    @classmethod
    def from_program(cls, program: Callable, domain: Optional[ChartBox] = None,
                     name: str = "program") -> "ImmersionMap":
        """Build an immersion from a coordinate program (t, u, v) -> 4 coordinates

        The program may only use arithmetic and the math helpers of
        src.geom.hyperdual; partials are obtained by hyper-dual evaluation.
        """
        domain = domain or ChartBox.unbounded()

        def evaluate(p: ChartPoint, i: int, j: int):
            seeds = []
            for axis, value in enumerate((p.x1, p.x2, p.x3)):
                seeds.append(HyperDual(value, 1.0 if axis == i else 0.0, 1.0 if axis == j else 0.0))
            coords = program(*seeds)
            if len(coords) != 4:
                raise ParameterError(f"Coordinate program {name} must return 4 coordinates")
            return [c if isinstance(c, HyperDual) else HyperDual(float(c)) for c in coords]

        def position(p: ChartPoint) -> np.ndarray:
            return np.array([float(c) for c in program(p.x1, p.x2, p.x3)], dtype=float)

        def first(p: ChartPoint) -> np.ndarray:
            jac = np.empty((3, 4))
            for i in range(3):
                jac[i] = [c.e1 for c in evaluate(p, i, i)]
            return jac

        def second(p: ChartPoint) -> np.ndarray:
            hess = np.empty((3, 3, 4))
            for i in range(3):
                for j in range(i, 3):
                    hess[i, j] = [c.e12 for c in evaluate(p, i, j)]
                    hess[j, i] = hess[i, j]
            return hess

        return cls(name, domain, position, first, second)

    def transformed(self, rotation: np.ndarray, translation: Optional[np.ndarray] = None,
                    name: Optional[str] = None) -> "ImmersionMap":
        """Image under the ambient motion x -> rotation @ x + translation"""
        rot = np.asarray(rotation, dtype=float)
        if rot.shape != (4, 4):
            raise ParameterError(f"Ambient motion needs a 4x4 matrix, got shape {rot.shape}")
        shift = np.zeros(4) if translation is None else np.asarray(translation, dtype=float)
        return ImmersionMap(
            name or f"{self.name}~moved",
            self.domain,
            lambda p: rot @ self._position(p) + shift,
            lambda p: np.asarray(self._first(p)) @ rot.T,
            lambda p: np.asarray(self._second(p)) @ rot.T,
        )

    def scaled(self, factor: float, name: Optional[str] = None) -> "ImmersionMap":
        """Homothetic image c * L"""
        if not (math.isfinite(factor) and factor > 0.0):
            raise ParameterError(f"Scale factor must be positive, got {factor!r}")
        return ImmersionMap(
            name or f"{self.name}*{factor:g}",
            self.domain,
            lambda p: factor * np.asarray(self._position(p)),
            lambda p: factor * np.asarray(self._first(p)),
            lambda p: factor * np.asarray(self._second(p)),
        )


@dataclass(frozen=True)
class GridSpec:
    """Tensor grid of shape (nt, nu, nv) spanning a finite chart box"""
    shape: Tuple[int, int, int]
    box: ChartBox

    def __post_init__(self):
        if len(self.shape) != 3 or any(int(n) != n or n < 0 for n in self.shape):
            raise ParameterError(f"Grid shape needs three non-negative integers, got {self.shape}")

    @staticmethod
    def parse_shape(text: str) -> Tuple[int, int, int]:
        """Parse 'NtxNuxNv'"""
        parts = str(text).lower().split("x")
        if len(parts) != 3:
            raise ParameterError(f"Grid must look like NtxNuxNv, got {text!r}")
        try:
            shape = tuple(int(part) for part in parts)
        except ValueError:
            raise ParameterError(f"Grid must look like NtxNuxNv, got {text!r}")
        if min(shape) < 0:
            raise ParameterError(f"Grid sizes must be non-negative, got {text!r}")
        return shape

    @property
    def size(self) -> int:
        return self.shape[0] * self.shape[1] * self.shape[2]

    def points(self) -> Iterator[Tuple[Tuple[int, int, int], ChartPoint]]:
        """Grid indices and nodes in lexicographic index order"""
        if self.size == 0:
            return
        ax_t, ax_u, ax_v = self.box.axes(self.shape)
        for i, t in enumerate(ax_t):
            for j, u in enumerate(ax_u):
                for k, v in enumerate(ax_v):
                    yield (i, j, k), ChartPoint(float(t), float(u), float(v))

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "t_range": list(self.box.ranges()[0]),
            "u_range": list(self.box.ranges()[1]),
            "v_range": list(self.box.ranges()[2]),
        }
