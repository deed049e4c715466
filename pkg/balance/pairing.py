"""
Structure of balanced uniform configurations with an odd number of vectors.

For a labeled configuration (v_0 .. v_{2n}) each index i owns n unordered
pairs {k, l} with det(v_i, v_k) = -det(v_i, v_l); every 2-subset of indices
belongs to exactly one i. The map {k, l} -> i is the pairing map phi.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from common.errors import AmbiguousPairing, InconsistentConstants, NotBalanced, NotUniform, UsageError
from common.log import logger
from geometry import ArithmeticMode, Configuration, LabeledConfiguration, Scalar, cyclic_index, det2

from .balance import balance_tolerance, is_balanced, is_uniform

Pair = FrozenSet[int]


def _require_odd(c: Configuration):
    if c.m < 3 or c.m % 2 == 0:
        raise UsageError("needs an odd number of vectors m >= 3, got m = {}".format(c.m), {"m": c.m})


def _require_balanced_uniform(c: Configuration, tol=None):
    uniform = is_uniform(c)
    if not uniform.uniform:
        i, j = uniform.witness
        raise NotUniform("vectors {} and {} are parallel".format(i, j), {"indices": [i, j]})
    report = is_balanced(c, tol)
    if not report.balanced:
        i, x = report.witness
        raise NotBalanced("row {} determinant multiset is not symmetric at {}".format(i, x), {"index": i, "value": x})


@dataclass(frozen=True)
class PairingMap:
    m: int
    pairs: Dict[int, Tuple[Pair, ...]]
    phi: Dict[Pair, int]

    def __call__(self, k: int, l: int) -> int:
        return self.phi[frozenset((cyclic_index(k, self.m), cyclic_index(l, self.m)))]

    def as_rows(self) -> List[list]:
        """[[k, l], i] rows sorted by (k, l)."""
        return [[sorted(p), i] for p, i in sorted(self.phi.items(), key=lambda item: sorted(item[0]))]


def build_pairing(c: LabeledConfiguration, tol=None) -> PairingMap:
    _require_odd(c)
    _require_balanced_uniform(c, tol)
    tol = balance_tolerance(c, tol)
    exact = c.mode == ArithmeticMode.EXACT

    pairs: Dict[int, Tuple[Pair, ...]] = {}
    phi: Dict[Pair, int] = {}
    for i in range(c.m):
        vi = c.vectors[i]
        positives = sorted((det2(vi, c.vectors[j]), j) for j in range(c.m) if j != i and det2(vi, c.vectors[j]) > 0)
        negatives = sorted((-det2(vi, c.vectors[j]), j) for j in range(c.m) if j != i and det2(vi, c.vectors[j]) < 0)
        if len(positives) != len(negatives):
            raise NotBalanced(
                "row {} has {} positive and {} negative determinants".format(i, len(positives), len(negatives)),
                {"index": i},
            )
        row = []
        for (dp, k), (dn, l) in zip(positives, negatives):
            mismatch = dp != dn if exact else abs(dp - dn) > tol
            if mismatch:
                raise AmbiguousPairing(
                    "row {} cannot match det {} against det {}".format(i, dp, -dn), {"index": i, "pair": sorted((k, l))}
                )
            pair = frozenset((k, l))
            if pair in phi:
                raise AmbiguousPairing(
                    "pair {} claimed by both {} and {}".format(sorted(pair), phi[pair], i),
                    {"pair": sorted(pair), "indices": [phi[pair], i]},
                )
            phi[pair] = i
            row.append(pair)
        pairs[i] = tuple(row)

    if len(phi) != c.m * (c.m - 1) // 2:
        raise AmbiguousPairing("pairing covers {} of {} index pairs".format(len(phi), c.m * (c.m - 1) // 2))
    logger.debug("[Pairing] built phi for m={}".format(c.m))
    return PairingMap(c.m, pairs, phi)


@dataclass(frozen=True)
class Verdict:
    passed: bool
    witness: Optional[Tuple[int, int]] = None


def verify_antisymmetry(c: LabeledConfiguration, tol=None) -> Verdict:
    """det(v_k, v_{k-a}) = -det(v_k, v_{k+a}) for every k and 1 <= a <= n; witness (k, a)."""
    _require_odd(c)
    tol = balance_tolerance(c, tol)
    for k in range(c.m):
        for a in range(1, c.n + 1):
            left = det2(c.at(k), c.at(k - a))
            right = det2(c.at(k), c.at(k + a))
            if abs(left + right) > tol:
                return Verdict(False, (k, a))
    return Verdict(True)


@dataclass(frozen=True)
class StepConstants:
    A1: Scalar
    An: Scalar


def step_constants(c: LabeledConfiguration, tol=None) -> StepConstants:
    _require_odd(c)
    uniform = is_uniform(c)
    if not uniform.uniform:
        i, j = uniform.witness
        raise NotUniform("vectors {} and {} are parallel".format(i, j), {"indices": [i, j]})
    tol = balance_tolerance(c, tol)
    n = c.n
    a1 = det2(c.at(0), c.at(1))
    an = det2(c.at(0), c.at(n))
    for k in range(1, c.m):
        d1 = det2(c.at(k), c.at(k + 1))
        dn = det2(c.at(k), c.at(k + n))
        if abs(d1 - a1) > tol or abs(dn - an) > tol:
            raise InconsistentConstants(
                "shift {} gives ({}, {}) instead of ({}, {})".format(k, d1, dn, a1, an), {"index": k}
            )
    return StepConstants(a1, an)


def half_plane_counts(c: Configuration, tol=None) -> Tuple[int, ...]:
    """For each k, how many v_j lie strictly to the left of v_k."""
    tol = balance_tolerance(c, tol)
    return tuple(
        sum(1 for j, vj in enumerate(c.vectors) if j != k and det2(vk, vj) > tol) for k, vk in enumerate(c.vectors)
    )


def predicted_pairing(n: int) -> Dict[Pair, int]:
    """phi({0, u}) in closed form: u/2 for even u, (u+1)/2 + n for odd u."""
    if n < 1:
        raise ValueError("n must be >= 1, got {}".format(n))
    return {frozenset((0, u)): (u // 2 if u % 2 == 0 else (u + 1) // 2 + n) for u in range(1, 2 * n + 1)}


def verify_pairing_formula(pairing: PairingMap) -> Verdict:
    """Compare phi({0, u}) with the closed form; witness (u, phi({0, u}))."""
    n = (pairing.m - 1) // 2
    for pair, expected in sorted(predicted_pairing(n).items(), key=lambda item: max(item[0])):
        actual = pairing.phi.get(pair)
        if actual != expected:
            return Verdict(False, (max(pair), actual))
    return Verdict(True)
