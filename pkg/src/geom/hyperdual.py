#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: hyperdual.py
# Pathname: /path/to/ideal4/src/geom/
# Description: Hyper-dual numbers a + b e1 + c e2 + d e1e2 (e1^2 = e2^2 = 0)
#              for exact first and mixed second derivatives of coordinate
#              programs
# -----------------------------------------------------------------------------

import math
from numbers import Real
from typing import Callable, Union

import numpy as np


class HyperDual:
    """Scalar hyper-dual number

    Evaluating f at x + e1 * dx + e2 * dy yields f(x) in `real`, the two
    directional derivatives in `e1` and `e2`, and the mixed second derivative
    in `e12`, all exact to rounding.
    """

    __slots__ = ("real", "e1", "e2", "e12")

    def __init__(self, real: float, e1: float = 0.0, e2: float = 0.0, e12: float = 0.0):
        self.real = float(real)
        self.e1 = float(e1)
        self.e2 = float(e2)
        self.e12 = float(e12)

    def __repr__(self) -> str:
        return f"HyperDual({self.real!r}, {self.e1!r}, {self.e2!r}, {self.e12!r})"

    @staticmethod
    def _lift(other: "Number") -> "HyperDual":
        if isinstance(other, HyperDual):
            return other
        if isinstance(other, (Real, np.floating, np.integer)):
            return HyperDual(float(other))
        raise TypeError(f"Unsupported operand type for HyperDual: {type(other).__name__}")

    def chain(self, f0: float, f1: float, f2: float) -> "HyperDual":
        """Apply a scalar function given its value and first two derivatives at self.real"""
        return HyperDual(f0, f1 * self.e1, f1 * self.e2, f1 * self.e12 + f2 * self.e1 * self.e2)

    def __neg__(self) -> "HyperDual":
        return HyperDual(-self.real, -self.e1, -self.e2, -self.e12)

    def __pos__(self) -> "HyperDual":
        return self

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return HyperDual(self.real + o.real, self.e1 + o.e1, self.e2 + o.e2, self.e12 + o.e12)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return HyperDual(self.real - o.real, self.e1 - o.e1, self.e2 - o.e2, self.e12 - o.e12)

    def __rsub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return HyperDual(
            self.real * o.real,
            self.real * o.e1 + self.e1 * o.real,
            self.real * o.e2 + self.e2 * o.real,
            self.real * o.e12 + self.e1 * o.e2 + self.e2 * o.e1 + self.e12 * o.real,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "HyperDual":
        if self.real == 0.0:
            raise ZeroDivisionError("HyperDual division by a number with zero real part")
        inv = 1.0 / self.real
        return self.chain(inv, -inv * inv, 2.0 * inv * inv * inv)

    def __truediv__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, exponent):
        if isinstance(exponent, HyperDual):
            return exp(exponent * log(self))
        n = float(exponent)
        if n == int(n) and n >= 0:
            result = HyperDual(1.0)
            for _ in range(int(n)):
                result = result * self
            return result
        x = self.real
        return self.chain(x ** n, n * x ** (n - 1.0), n * (n - 1.0) * x ** (n - 2.0))

    def __rpow__(self, base):
        return exp(self * math.log(float(base)))

    def __float__(self) -> float:
        return self.real


Number = Union[float, int, HyperDual]


def _unary(name: str, f: Callable[[float], float],
           d1: Callable[[float], float], d2: Callable[[float], float]):
    def apply(x):
        if isinstance(x, HyperDual):
            a = x.real
            return x.chain(f(a), d1(a), d2(a))
        return f(float(x))
    apply.__name__ = name
    apply.__doc__ = f"{name} for floats and hyper-dual numbers"
    return apply


sin = _unary("sin", math.sin, math.cos, lambda a: -math.sin(a))
cos = _unary("cos", math.cos, lambda a: -math.sin(a), lambda a: -math.cos(a))
exp = _unary("exp", math.exp, math.exp, math.exp)
log = _unary("log", math.log, lambda a: 1.0 / a, lambda a: -1.0 / (a * a))
sqrt = _unary("sqrt", math.sqrt, lambda a: 0.5 / math.sqrt(a), lambda a: -0.25 / (a * math.sqrt(a)))
sinh = _unary("sinh", math.sinh, math.cosh, math.sinh)
cosh = _unary("cosh", math.cosh, math.sinh, math.cosh)
tanh = _unary("tanh", math.tanh,
              lambda a: 1.0 - math.tanh(a) ** 2,
              lambda a: -2.0 * math.tanh(a) * (1.0 - math.tanh(a) ** 2))
arcsinh = _unary("arcsinh", math.asinh,
                 lambda a: 1.0 / math.sqrt(1.0 + a * a),
                 lambda a: -a / (1.0 + a * a) ** 1.5)
