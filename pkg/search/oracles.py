"""Seeded generators for test oracles: random GL2 maps and perturbations."""
import math

import numpy as np

from canonical import LinearMap2
from config import conf
from geometry import ArithmeticMode, Configuration, PlaneVector


def random_invertible(seed: int, cond_max: float = None) -> LinearMap2:
    """Gaussian 2x2 matrix, redrawn until cond <= cond_max and |det| >= 1/cond_max."""
    cond_max = conf().get("cond_max", 100.0) if cond_max is None else cond_max
    if cond_max <= 1:
        raise ValueError("cond_max must be > 1, got {}".format(cond_max))
    rng = np.random.default_rng(seed)
    while True:
        matrix = rng.standard_normal((2, 2))
        if abs(np.linalg.det(matrix)) < 1.0 / cond_max:
            continue
        if np.linalg.cond(matrix) > cond_max:
            continue
        return LinearMap2.from_array(matrix)


def perturb(c: Configuration, eps: float, seed: int) -> Configuration:
    """Move every vector by an offset of length in [eps/2, eps] in a random direction."""
    if eps < 0:
        raise ValueError("eps must be >= 0, got {}".format(eps))
    if eps == 0:
        return c
    rng = np.random.default_rng(seed)
    vectors = []
    for v in c.vectors:
        angle = rng.uniform(0.0, 2.0 * math.pi)
        radius = eps * rng.uniform(0.5, 1.0)
        vectors.append(PlaneVector(float(v.x) + radius * math.cos(angle), float(v.y) + radius * math.sin(angle)))
    return Configuration(tuple(vectors), ArithmeticMode.FLOAT)
