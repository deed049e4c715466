"""
Certified real root isolation for integer polynomials: Sturm sequences
evaluated exactly at rational points, dyadic splitting until every interval
holds one root, then sign bisection down to the requested width.
"""
from fractions import Fraction
from typing import Dict, List, Tuple

from .int_poly import IntPoly

Interval = Tuple[Fraction, Fraction]


def sturm_chain(p: IntPoly) -> List[IntPoly]:
    """p, p', then negated remainders, each scaled to primitive form by a positive factor."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p.primitive()]
    if p.degree == 0:
        return chain
    chain.append(p.derivative().primitive())
    while True:
        rem = chain[-2].remainder(chain[-1])
        if rem.is_zero():
            return chain
        chain.append((-rem).primitive())


def sign_changes(chain: List[IntPoly], x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: List[IntPoly], a, b) -> int:
    """Distinct real roots in (a, b]."""
    return sign_changes(chain, Fraction(a)) - sign_changes(chain, Fraction(b))


def root_bound(p: IntPoly) -> Fraction:
    """
    Power of two B with every root strictly inside (-B, B). With
    |a_{d-i}| <= |a_d| h^i for all i, every root has modulus <= 2h.
    """
    d, lead = p.degree, abs(p.lead)
    h = 1
    while any(abs(p.coefficient(d - i)) > lead * h**i for i in range(1, d + 1)):
        h *= 2
    return Fraction(4 * h)


def _refine(chain: List[IntPoly], p: IntPoly, a: Fraction, b: Fraction, width: Fraction) -> Interval:
    # exactly one simple root in (a, b]
    if p.sign_at(b) == 0:
        return b, b
    while p.sign_at(a) == 0:
        mid = (a + b) / 2
        if count_roots(chain, mid, b):
            a = mid
        else:
            b = mid
            if p.sign_at(b) == 0:
                return b, b
    sign_a = p.sign_at(a)
    while b - a > width:
        mid = (a + b) / 2
        sign_mid = p.sign_at(mid)
        if sign_mid == 0:
            return mid, mid
        if sign_mid == sign_a:
            a = mid
        else:
            b = mid
    return a, b


def isolate_real_roots(p: IntPoly, width) -> List[Interval]:
    """
    Disjoint intervals (a, b], one per distinct real root, each of length <= width.
    A degenerate interval (r, r) marks an exact dyadic root. Sorted ascending.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError("root width must be positive")
    chain = sturm_chain(p)
    if chain[-1].degree > 0:
        # same real roots, all simple
        p = p.square_free()
        chain = sturm_chain(p)
    bound = root_bound(p)

    changes: Dict[Fraction, int] = {}

    def changes_at(x: Fraction) -> int:
        if x not in changes:
            changes[x] = sign_changes(chain, x)
        return changes[x]

    isolated: List[Interval] = []
    pending = [(-bound, bound)]
    while pending:
        a, b = pending.pop()
        count = changes_at(a) - changes_at(b)
        if count == 0:
            continue
        if count > 1:
            mid = (a + b) / 2
            pending.append((a, mid))
            pending.append((mid, b))
            continue
        isolated.append(_refine(chain, p, a, b, width))
    return sorted(isolated)
