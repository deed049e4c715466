"""
Canonical form of a balanced uniform configuration with odd m = 2n+1.

Label by increasing argument, send (v_0, v_n) to (U, V) with g_C, read
t_C off the image of v_{n+1}, match t_C to the grid 2cos(2kπ/m), and compose
g = g_k^{-1} g_C where g_k sends (1, ω^k) to (U, V). Then g(v_j) = ω^{-2kj}.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from balance import is_balanced, is_uniform
from common.errors import (
    NoGridMatch,
    NotBalanced,
    NotNormalized,
    NotUniform,
    PlaneBalanceError,
    ResidualTooLarge,
    UsageError,
)
from common.log import logger
from config import conf
from geometry import ArithmeticMode, Configuration, LabeledConfiguration, PlaneVector, Scalar, label_by_increasing_arguments, roots_of_unity
from recurrence import numeric_sequences, t_value

from .linear_map import LinearMap2, frame_map


def extract_t(g: LinearMap2, v_next: PlaneVector, tol=None) -> Scalar:
    """g(v_next) must be (t, -1); returns t."""
    p = g.apply(v_next)
    if p.mode == ArithmeticMode.EXACT:
        normalized = p.y == -1
    else:
        tol = conf().get("normalize_tol", 1e-9) if tol is None else tol
        normalized = abs(p.y + 1) <= tol
    if not normalized:
        raise NotNormalized("image {} does not have y = -1".format(p), {"y": p.y})
    return p.x


def match_k(t, m: int, tol=None) -> int:
    if m < 3 or m % 2 == 0:
        raise UsageError("m must be odd and >= 3, got {}".format(m), {"m": m})
    tol = conf().get("grid_tol", 1e-6) if tol is None else tol
    t = float(t)
    n = (m - 1) // 2
    distances = {k: abs(t - t_value(m, k)) for k in range(1, n + 1)}
    k = min(distances, key=lambda key: distances[key])
    if distances[k] > tol:
        raise NoGridMatch(
            "t = {!r} is {:.3g} away from the nearest grid value".format(t, distances[k]),
            {"t": t, "m": m, "nearest_k": k, "distance": distances[k]},
        )
    return k


@dataclass(frozen=True)
class CanonicalForm:
    g: LinearMap2
    t: Scalar
    k: int
    index_map: Tuple[int, ...]
    residual: float
    labeled: LabeledConfiguration
    frame: LinearMap2

    @property
    def m(self) -> int:
        return self.labeled.m

    def exponent(self, i: int) -> int:
        """g(v_i) = ω^exponent(i)."""
        return self.index_map[i % self.m]

    @property
    def t_exact(self) -> Optional[Fraction]:
        """t_C as a rational when the input was exact."""
        return self.t if isinstance(self.t, Fraction) else None

    @property
    def images(self) -> Tuple[PlaneVector, ...]:
        return tuple(self.g.apply(v.to_float()) for v in self.labeled.vectors)


def canonicalize(c: Configuration, tol=None) -> CanonicalForm:
    tol = conf().get("residual_tol", 1e-8) if tol is None else tol

    balance = is_balanced(c)
    if not balance.balanced:
        i, x = balance.witness
        raise NotBalanced("row {} determinant multiset is not symmetric at {}".format(i, x), {"index": i, "value": x})
    uniform = is_uniform(c)
    if not uniform.uniform:
        i, j = uniform.witness
        raise NotUniform("vectors {} and {} are parallel".format(i, j), {"indices": [i, j]})
    if c.m < 3 or c.m % 2 == 0:
        raise UsageError("canonical forms need odd m >= 3, got m = {}".format(c.m), {"m": c.m})

    labeled = label_by_increasing_arguments(c)
    m, n = labeled.m, labeled.n
    g_c = frame_map(labeled[0], labeled[n])
    t_c = extract_t(g_c, labeled[n + 1])
    k = match_k(t_c, m)

    unit = roots_of_unity(m)
    g = LinearMap2.from_columns(unit[0], unit[k]) @ g_c.to_float()
    index_map = tuple((-2 * k * j) % m for j in range(m))

    residual = max(g.apply(v.to_float()).distance(unit[e]) for v, e in zip(labeled.vectors, index_map))
    if residual > tol:
        raise ResidualTooLarge(
            "canonical residual {:.3g} exceeds {:.3g}".format(residual, tol), {"residual": residual, "k": k}
        )
    logger.debug("[Canonical] m={} k={} t={} residual={:.3g}".format(m, k, t_c, residual))
    return CanonicalForm(g, t_c, k, index_map, residual, labeled, g_c)


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    reason: Optional[str] = None
    # maps the labeled vectors of b onto those of a, slot by slot
    transform: Optional[LinearMap2] = None


def gl2_equivalent(a: Configuration, b: Configuration, tol=None) -> Equivalence:
    if a.m != b.m:
        return Equivalence(False, "SizeMismatch")
    try:
        form_a = canonicalize(a, tol)
        form_b = canonicalize(b, tol)
    except PlaneBalanceError as e:
        return Equivalence(False, e.code)
    return Equivalence(True, None, form_a.g.inverse() @ form_b.g)


def frame_deviation(m: int, k: int) -> float:
    """max over i < n of |w_i(t_k) - g_k(ω^{-k(1+2i)})|, with g_k sending (1, ω^k) to (U, V)."""
    if m < 3 or m % 2 == 0:
        raise UsageError("m must be odd and >= 3, got {}".format(m), {"m": m})
    n = (m - 1) // 2
    if not 1 <= k <= n:
        raise UsageError("k must satisfy 1 <= k <= {}, got {}".format(n, k), {"k": k})
    unit = roots_of_unity(m)
    g_k = frame_map(unit[0], unit[k])
    _, ws = numeric_sequences(t_value(m, k), n)
    return max(ws[i].distance(g_k.apply(unit[(-k * (1 + 2 * i)) % m])) for i in range(n))
