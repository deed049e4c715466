import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from common.errors import ClosureViolation, RootCountMismatch, UsageError
from common.log import logger
from config import conf
from geometry import ArithmeticMode, Configuration, PlaneVector

from .sequences import numeric_sequences, symbolic_sequences
from .sturm import isolate_real_roots

U = PlaneVector(1.0, 0.0)
V = PlaneVector(0.0, 1.0)


@dataclass(frozen=True)
class RootGrid:
    m: int
    values: Tuple[float, ...]

    @property
    def n(self) -> int:
        return (self.m - 1) // 2

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def _require_odd_m(m: int) -> int:
    if m < 3 or m % 2 == 0:
        raise UsageError("m must be odd and >= 3, got {}".format(m), {"m": m})
    return (m - 1) // 2


def t_value(m: int, k: int) -> float:
    """t_k = 2 cos(2kπ/m)."""
    return 2.0 * math.cos(2.0 * math.pi * k / m)


def t_grid(m: int) -> RootGrid:
    n = _require_odd_m(m)
    return RootGrid(m, tuple(sorted(t_value(m, k) for k in range(1, n + 1))))


def wn_equation_roots(n: int, width=None, filter_tol=None) -> RootGrid:
    """
    Solve w_n(t) = U: isolate the real roots of w_n.y, then keep those where
    w_n.x evaluates to 1.
    """
    if n < 1:
        raise UsageError("n must be >= 1, got {}".format(n), {"n": n})
    width = conf().get("root_width", 1e-12) if width is None else width
    filter_tol = conf().get("root_filter_tol", 1e-9) if filter_tol is None else filter_tol

    _, ws = symbolic_sequences(n)
    wn = ws[n]
    intervals = isolate_real_roots(wn.y, width)
    centers = [(lo + hi) / 2 for lo, hi in intervals]

    # w_n.y is even of degree 2n with w_n.y(0) != 0: roots come in ± pairs
    if len(centers) > 2 * n or wn.y.sign_at(Fraction(0)) == 0:
        raise RootCountMismatch("w_n.y has {} real roots, expected at most {}".format(len(centers), 2 * n), {"n": n})
    for r, s in zip(centers, reversed(centers)):
        if abs(r + s) > 2 * Fraction(width):
            raise RootCountMismatch("roots {} and {} do not pair up".format(float(r), float(s)), {"n": n})

    kept: List[Fraction] = [r for r in centers if abs(float(wn.x.evaluate(r)) - 1.0) <= filter_tol]
    if len(kept) != n:
        raise RootCountMismatch(
            "{} roots satisfy w_n = U, expected {}".format(len(kept), n), {"n": n, "found": [float(r) for r in kept]}
        )
    logger.debug("[Roots] n={} roots={}".format(n, [float(r) for r in kept]))
    return RootGrid(2 * n + 1, tuple(float(r) for r in kept))


def model_configuration(m: int, k: int, tol=None) -> Configuration:
    """(u_0, .., u_{n-1}, V, w_0, .., w_{n-1}) at t = t_k; raises ClosureViolation if w_n != U or u_n != V."""
    n = _require_odd_m(m)
    if not 1 <= k <= n:
        raise UsageError("k must satisfy 1 <= k <= {}, got {}".format(n, k), {"k": k})
    tol = conf().get("closure_tol", 1e-10) if tol is None else tol

    us, ws = numeric_sequences(t_value(m, k), n)
    closure = max(ws[n].distance(U), us[n].distance(V))
    if closure > tol:
        raise ClosureViolation(
            "closure off by {:.3g} at m={} k={}".format(closure, m, k), {"m": m, "k": k, "closure": closure}
        )
    return Configuration(tuple(us[:n]) + (V,) + tuple(ws[:n]), ArithmeticMode.FLOAT)
