import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

from common.errors import DuplicateArgument, MixedMode, ZeroVector
from common.log import logger
from config import conf
from geometry.vector import TWO_PI, ArithmeticMode, PlaneVector, argument, det2


def cyclic_index(k: int, m: int) -> int:
    """Indices are read modulo m: v_k is v_{k mod m}."""
    if m < 1:
        raise ValueError("cyclic index needs m >= 1, got {}".format(m))
    return k % m


@dataclass(frozen=True)
class Configuration:
    vectors: Tuple[PlaneVector, ...]
    mode: ArithmeticMode

    def __post_init__(self):
        vectors = tuple(self.vectors)
        if not vectors:
            raise ValueError("a configuration needs at least one vector")
        for i, v in enumerate(vectors):
            if v.mode != self.mode:
                raise MixedMode("vector {} is {} in a {} configuration".format(i, v.mode, self.mode))
            if v.is_zero():
                raise ZeroVector("vector {} is zero".format(i), {"index": i})
        object.__setattr__(self, "vectors", vectors)

    @classmethod
    def of(cls, points: Iterable, mode: Optional[ArithmeticMode] = None) -> "Configuration":
        vectors = tuple(p if isinstance(p, PlaneVector) else PlaneVector(*p) for p in points)
        if not vectors:
            raise ValueError("a configuration needs at least one vector")
        return cls(vectors, mode or vectors[0].mode)

    @property
    def m(self) -> int:
        return len(self.vectors)

    @property
    def n(self) -> Optional[int]:
        return (self.m - 1) // 2 if self.m % 2 == 1 else None

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def at(self, k: int) -> PlaneVector:
        return self.vectors[cyclic_index(k, self.m)]

    def scale(self) -> float:
        return max(v.norm() for v in self.vectors)

    def to_float(self) -> "Configuration":
        return Configuration(tuple(v.to_float() for v in self.vectors), ArithmeticMode.FLOAT)

    def permuted(self, order: Sequence[int]) -> "Configuration":
        return Configuration(tuple(self.vectors[i] for i in order), self.mode)


@dataclass(frozen=True)
class LabeledConfiguration(Configuration):
    # permutation[slot] = index of that vector in the unlabeled input
    permutation: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        super().__post_init__()
        perm = tuple(self.permutation) or tuple(range(len(self.vectors)))
        if sorted(perm) != list(range(len(self.vectors))):
            raise ValueError("permutation {} is not a bijection of the indices".format(perm))
        object.__setattr__(self, "permutation", perm)

    def to_float(self) -> "LabeledConfiguration":
        return LabeledConfiguration(tuple(v.to_float() for v in self.vectors), ArithmeticMode.FLOAT, self.permutation)


def det_tolerance(c: Configuration, tol=None):
    """Zero threshold for determinants: 0 in exact mode, det_tol scaled by max|v|^2 otherwise."""
    if c.mode == ArithmeticMode.EXACT:
        return 0
    if tol is not None:
        return tol
    return conf().get("det_tol", 1e-12) * c.scale() ** 2


def label_by_increasing_arguments(c: Configuration, tie_tol: float = None) -> LabeledConfiguration:
    if tie_tol is None:
        tie_tol = conf().get("argument_tie_tol", 1e-12)
    args = [argument(v) for v in c.vectors]
    order = sorted(range(c.m), key=lambda i: args[i])

    for s in range(c.m - 1):
        i, j = order[s], order[s + 1]
        if args[j] - args[i] < tie_tol or _same_ray(c.vectors[i], c.vectors[j]):
            raise DuplicateArgument(
                "vectors {} and {} share the argument {:.12g}".format(i, j, args[i]),
                {"indices": [i, j]},
            )
    if c.m > 1 and args[order[-1]] - args[order[0]] > TWO_PI - tie_tol:
        raise DuplicateArgument(
            "vectors {} and {} share the argument 0 across the branch cut".format(order[0], order[-1]),
            {"indices": [order[0], order[-1]]},
        )

    logger.debug("[Geometry] labeled m={} permutation={}".format(c.m, order))
    return LabeledConfiguration(tuple(c.vectors[i] for i in order), c.mode, tuple(order))


def _same_ray(a: PlaneVector, b: PlaneVector) -> bool:
    if a.mode != ArithmeticMode.EXACT:
        return False
    return det2(a, b) == 0 and a.x * b.x + a.y * b.y > 0


def roots_of_unity(m: int) -> LabeledConfiguration:
    """U_m as float vectors (cos 2πk/m, sin 2πk/m), already labeled."""
    if m < 1:
        raise ValueError("roots of unity need m >= 1, got {}".format(m))
    vectors = []
    for k in range(m):
        angle = 2.0 * math.pi * k / m
        vectors.append(PlaneVector(math.cos(angle), math.sin(angle)))
    return LabeledConfiguration(tuple(vectors), ArithmeticMode.FLOAT)
