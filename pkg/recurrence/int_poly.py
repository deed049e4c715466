"""
Integer polynomials in one variable t, stored as ascending coefficient tuples
with no trailing zeros. The zero polynomial has degree -1 and counts as both
even and odd.

Arithmetic runs on sympy.Poly over ZZ. Division goes through QQ and comes
back scaled by a positive factor, so signs survive for Sturm chains.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Integral
from typing import Sequence, Tuple

import numpy as np
import sympy
from sympy import ZZ, Poly

from geometry import PlaneVector

_t = sympy.Symbol("t")


def _trim(coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _integral(poly: Poly) -> Poly:
    if poly.get_domain().is_Field:
        _, poly = poly.clear_denoms(convert=True)
    return poly


@dataclass(frozen=True)
class IntPoly:
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if isinstance(c, bool) or not isinstance(c, Integral):
                raise TypeError("integer coefficients only, got {!r}".format(c))
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPoly":
        """Rational coefficients are cleared by their positive common denominator."""
        poly = _integral(poly)
        if poly.is_zero:
            return cls()
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @cached_property
    def poly(self) -> Poly:
        return Poly.from_list(list(reversed(self.coeffs)) or [0], _t, domain=ZZ)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.from_poly(self.poly + other.poly)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.from_poly(self.poly - other.poly)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return IntPoly.from_poly(self.poly * other.poly)
        if isinstance(other, bool) or not isinstance(other, Integral):
            return NotImplemented
        return IntPoly.from_poly(self.poly.mul_ground(int(other)))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "IntPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly.from_poly(self.poly.diff(_t))

    def content(self) -> int:
        if self.is_zero():
            return 0
        return abs(int(self.poly.primitive()[0]))

    def primitive(self) -> "IntPoly":
        """Divide by the (positive) gcd of the coefficients; signs are kept."""
        if self.is_zero():
            return self
        prim = IntPoly.from_poly(self.poly.primitive()[1])
        return -prim if (prim.lead > 0) != (self.lead > 0) else prim

    def square_free(self) -> "IntPoly":
        """Same distinct roots, each simple; primitive with a positive leading coefficient."""
        if self.degree < 1:
            return self
        return IntPoly.from_poly(self.poly.sqf_part())

    def evaluate(self, t):
        """Exact at ints and Fractions; floats go through numpy."""
        if isinstance(t, (float, np.floating)):
            if self.is_zero():
                return 0.0
            return float(np.polyval(np.array(self.coeffs[::-1], dtype=float), t))
        t = Fraction(t)
        value = self.poly.eval(sympy.Rational(t.numerator, t.denominator))
        return Fraction(int(value.p), int(value.q))

    def sign_at(self, x: Fraction) -> int:
        """Exact sign at a rational point, by homogenized integer Horner."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        if self.is_zero():
            return 0
        acc = self.coeffs[-1]
        q_power = 1
        for c in reversed(self.coeffs[:-1]):
            q_power *= q
            acc = acc * p + c * q_power
        return (acc > 0) - (acc < 0)

    def remainder(self, divisor: "IntPoly") -> "IntPoly":
        """Remainder of division over Q, scaled by a positive factor back to integers."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        return IntPoly.from_poly(self.poly.rem(divisor.poly))

    def quotient(self, divisor: "IntPoly") -> "IntPoly":
        """Quotient of division over Q, scaled by a positive factor back to integers."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        return IntPoly.from_poly(self.poly.quo(divisor.poly))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if i == 1 else "t^{}".format(i))
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += " {} {}".format(sign, body)
        return text


@dataclass(frozen=True)
class PolyPair:
    """A plane vector whose coordinates are integer polynomials in t."""

    x: IntPoly
    y: IntPoly

    def __add__(self, other: "PolyPair") -> "PolyPair":
        return PolyPair(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "PolyPair") -> "PolyPair":
        return PolyPair(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "PolyPair":
        return PolyPair(-self.x, -self.y)

    def times_t(self) -> "PolyPair":
        return PolyPair(self.x.shift(), self.y.shift())

    def evaluate(self, t) -> PlaneVector:
        return PlaneVector(self.x.evaluate(t), self.y.evaluate(t))

    def __str__(self):
        return "({}, {})".format(self.x, self.y)
