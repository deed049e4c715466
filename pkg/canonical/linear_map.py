from dataclasses import dataclass

import numpy as np

from common.errors import MixedMode, SingularFrame
from config import conf
from geometry import ArithmeticMode, Configuration, PlaneVector, Scalar, as_scalar, det2
from geometry.vector import scalar_mode


@dataclass(frozen=True)
class LinearMap2:
    """The 2x2 matrix [[a, b], [c, d]] acting on column vectors."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        entries = [as_scalar(x) for x in (self.a, self.b, self.c, self.d)]
        if len({scalar_mode(x) for x in entries}) > 1:
            raise MixedMode("linear map mixes exact and float entries")
        for name, value in zip("abcd", entries):
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls, mode: ArithmeticMode = ArithmeticMode.FLOAT) -> "LinearMap2":
        one = 1 if mode == ArithmeticMode.EXACT else 1.0
        return cls(one, 0 * one, 0 * one, one)

    @classmethod
    def from_columns(cls, p: PlaneVector, q: PlaneVector) -> "LinearMap2":
        """The map sending U to p and V to q."""
        return cls(p.x, q.x, p.y, q.y)

    @classmethod
    def from_array(cls, array) -> "LinearMap2":
        array = np.asarray(array, dtype=float)
        return cls(float(array[0, 0]), float(array[0, 1]), float(array[1, 0]), float(array[1, 1]))

    @property
    def mode(self) -> ArithmeticMode:
        return scalar_mode(self.a)

    def determinant(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def apply(self, v: PlaneVector) -> PlaneVector:
        return PlaneVector(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    __call__ = apply

    def __matmul__(self, other: "LinearMap2") -> "LinearMap2":
        return LinearMap2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "LinearMap2":
        det = self.determinant()
        if det == 0:
            raise SingularFrame("map {} is singular".format(self.rows()))
        return LinearMap2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def to_float(self) -> "LinearMap2":
        return LinearMap2(float(self.a), float(self.b), float(self.c), float(self.d))

    def as_array(self) -> np.ndarray:
        return np.array([[float(self.a), float(self.b)], [float(self.c), float(self.d)]])

    def condition_number(self) -> float:
        return float(np.linalg.cond(self.as_array()))

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]


def frame_map(v0: PlaneVector, vn: PlaneVector, tol=None) -> LinearMap2:
    """g with g(v0) = U and g(vn) = V; SingularFrame when det(v0, vn) vanishes."""
    det = det2(v0, vn)
    if v0.mode == ArithmeticMode.EXACT:
        singular = det == 0
    else:
        if tol is None:
            tol = conf().get("det_tol", 1e-12) * max(v0.norm(), vn.norm()) ** 2
        singular = abs(det) <= tol
    if singular:
        raise SingularFrame("det({}, {}) = {} vanishes".format(v0, vn, det), {"det": det})
    return LinearMap2(vn.y / det, -vn.x / det, -v0.y / det, v0.x / det)


def apply_map(g: LinearMap2, c: Configuration) -> Configuration:
    """g applied to every vector; the result is float unless both sides are exact."""
    vectors = tuple(g.apply(v) for v in c.vectors)
    return Configuration(vectors, vectors[0].mode)
