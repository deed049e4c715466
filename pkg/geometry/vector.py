"""
Plane vectors over two arithmetic modes: exact rationals (Fraction) and
binary floats. A vector never mixes modes.
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Integral, Rational, Real
from typing import Union

from common import const
from common.errors import MixedMode, ZeroVector

Scalar = Union[Fraction, float]

TWO_PI = 2.0 * math.pi


class ArithmeticMode(Enum):
    EXACT = const.EXACT
    FLOAT = const.FLOAT

    def __str__(self):
        return self.value


def as_scalar(value) -> Scalar:
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (Integral, Rational)):
        return Fraction(value)
    if isinstance(value, Real):
        return float(value)
    raise TypeError("unsupported scalar {!r}".format(value))


def scalar_mode(value: Scalar) -> ArithmeticMode:
    return ArithmeticMode.EXACT if isinstance(value, Fraction) else ArithmeticMode.FLOAT


@dataclass(frozen=True)
class PlaneVector:
    x: Scalar
    y: Scalar

    def __post_init__(self):
        x, y = as_scalar(self.x), as_scalar(self.y)
        if scalar_mode(x) != scalar_mode(y):
            raise MixedMode("vector ({!r}, {!r}) mixes exact and float coordinates".format(self.x, self.y))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def mode(self) -> ArithmeticMode:
        return scalar_mode(self.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __add__(self, other: "PlaneVector") -> "PlaneVector":
        return PlaneVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "PlaneVector") -> "PlaneVector":
        return PlaneVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "PlaneVector":
        return PlaneVector(-self.x, -self.y)

    def __mul__(self, s) -> "PlaneVector":
        return PlaneVector(s * self.x, s * self.y)

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.hypot(float(self.x), float(self.y))

    def distance(self, other: "PlaneVector") -> float:
        return math.hypot(float(self.x) - float(other.x), float(self.y) - float(other.y))

    def to_float(self) -> "PlaneVector":
        return PlaneVector(float(self.x), float(self.y))

    def __str__(self):
        return "({}, {})".format(self.x, self.y)


def det2(a: PlaneVector, b: PlaneVector) -> Scalar:
    if a.mode != b.mode:
        raise MixedMode("det2 of {} vector and {} vector".format(a.mode, b.mode))
    return a.x * b.y - a.y * b.x


def argument(v: PlaneVector) -> float:
    """
    Polar argument in [0, 2π), 0 on the positive x-axis.
    Exact vectors are converted to float here; callers guard near ties.
    """
    if v.is_zero():
        raise ZeroVector("zero vector has no argument")
    theta = math.atan2(float(v.y), float(v.x))
    if theta < 0:
        theta += TWO_PI
    if theta >= TWO_PI:
        theta = 0.0
    return theta + 0.0
