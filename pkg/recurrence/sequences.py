"""
The paired sequences (u_i, w_i) generated from a single parameter t.

Starting at u_0 = U = (1, 0) and w_0 = (t, -1):

    u_{i+1} = t * w_i - u_i
    w_{i+1} = t * u_{i+1} - w_i

A balanced uniform configuration in canonical frame reads
(u_0, .., u_{n-1}, V, w_0, .., w_{n-1}) with w_n = U and u_n = V.
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from geometry import PlaneVector, as_scalar

from .int_poly import IntPoly, PolyPair


class RecurrenceVariant(Enum):
    CORRECTED = "corrected"
    # u_{i+1} = -t w_i - u_i, w_{i+1} = t u_i - w_i; breaks parity at w_1
    PRINTED = "printed"

    def __str__(self):
        return self.value


def numeric_sequences(
    t, n: int, variant: RecurrenceVariant = RecurrenceVariant.CORRECTED
) -> Tuple[List[PlaneVector], List[PlaneVector]]:
    if n < 0:
        raise ValueError("n must be >= 0, got {}".format(n))
    t = as_scalar(t)
    one, zero = t * 0 + 1, t * 0
    us = [PlaneVector(one, zero)]
    ws = [PlaneVector(t, -one)]
    for _ in range(n):
        u, w = us[-1], ws[-1]
        if variant == RecurrenceVariant.CORRECTED:
            u_next = t * w - u
            w_next = t * u_next - w
        else:
            u_next = -(t * w) - u
            w_next = t * u - w
        us.append(u_next)
        ws.append(w_next)
    return us, ws


def symbolic_sequences(
    n: int, variant: RecurrenceVariant = RecurrenceVariant.CORRECTED
) -> Tuple[List[PolyPair], List[PolyPair]]:
    if n < 0:
        raise ValueError("n must be >= 0, got {}".format(n))
    us = [PolyPair(IntPoly((1,)), IntPoly())]
    ws = [PolyPair(IntPoly((0, 1)), IntPoly((-1,)))]
    for _ in range(n):
        u, w = us[-1], ws[-1]
        if variant == RecurrenceVariant.CORRECTED:
            u_next = w.times_t() - u
            w_next = u_next.times_t() - w
        else:
            u_next = -w.times_t() - u
            w_next = u.times_t() - w
        us.append(u_next)
        ws.append(w_next)
    return us, ws


@dataclass(frozen=True)
class ParityVerdict:
    passed: bool
    index: Optional[int] = None
    which: Optional[str] = None


def check_parity_degrees(us: List[PolyPair], ws: List[PolyPair]) -> ParityVerdict:
    """
    For i >= 1: u_i.x even of degree 2i, u_i.y odd of degree 2i-1,
    w_i.x odd of degree 2i+1, w_i.y even of degree 2i.
    """
    for i in range(1, min(len(us), len(ws))):
        expectations = (
            ("u.x", us[i].x, IntPoly.is_even, 2 * i),
            ("u.y", us[i].y, IntPoly.is_odd, 2 * i - 1),
            ("w.x", ws[i].x, IntPoly.is_odd, 2 * i + 1),
            ("w.y", ws[i].y, IntPoly.is_even, 2 * i),
        )
        for name, poly, has_parity, degree in expectations:
            if not has_parity(poly):
                return ParityVerdict(False, i, name + "-parity")
            if poly.degree != degree:
                return ParityVerdict(False, i, name + "-degree")
    return ParityVerdict(True)
