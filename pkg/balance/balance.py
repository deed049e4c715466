"""
Balanced / uniform verdicts.

A configuration is balanced when, for every member v_i, the multiset
{det(v_i, v_j) : j != i} is symmetric around 0. Exact configurations are
compared exactly; float configurations cluster determinant values with an
absolute tolerance before the multiset comparison.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from common.errors import NotBalanced, OddM
from common.log import logger
from config import conf
from geometry import ArithmeticMode, Configuration, Scalar, det2, det_tolerance


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    witness: Optional[Tuple[int, Scalar]]
    rows: Tuple[Tuple[Scalar, ...], ...]
    tol: Scalar


@dataclass(frozen=True)
class UniformityReport:
    uniform: bool
    witness: Optional[Tuple[int, int]]


def determinant_rows(c: Configuration) -> Tuple[Tuple[Scalar, ...], ...]:
    """Row i lists det(v_i, v_j) for j != i in increasing j."""
    return tuple(tuple(det2(vi, vj) for j, vj in enumerate(c.vectors) if j != i) for i, vi in enumerate(c.vectors))


def balance_tolerance(c: Configuration, tol=None, rows=None):
    if c.mode == ArithmeticMode.EXACT:
        return 0
    if tol is not None:
        return tol
    rows = rows if rows is not None else determinant_rows(c)
    largest = max((abs(x) for row in rows for x in row), default=0.0)
    return conf().get("balance_rel_tol", 1e-9) * largest


def unmatched_value(values: Sequence[Scalar], tol, exact: bool) -> Optional[Scalar]:
    """First value of the row whose negation has no partner, or None if the row is symmetric."""
    if exact:
        counts = Counter(values)
        for x in values:
            if counts[x] != counts[-x]:
                return x
        return None

    positives = sorted(x for x in values if x > tol)
    negatives = sorted(-x for x in values if x < -tol)
    i = j = 0
    while i < len(positives) and j < len(negatives):
        if abs(positives[i] - negatives[j]) <= tol:
            i += 1
            j += 1
        elif positives[i] < negatives[j]:
            return positives[i]
        else:
            return -negatives[j]
    if i < len(positives):
        return positives[i]
    if j < len(negatives):
        return -negatives[j]
    return None


def is_balanced(c: Configuration, tol=None) -> BalanceReport:
    rows = determinant_rows(c)
    tol = balance_tolerance(c, tol, rows)
    exact = c.mode == ArithmeticMode.EXACT
    for i, row in enumerate(rows):
        x = unmatched_value(row, tol, exact)
        if x is not None:
            logger.debug("[Balance] row {} not symmetric at {}".format(i, x))
            return BalanceReport(False, (i, x), rows, tol)
    return BalanceReport(True, None, rows, tol)


def is_uniform(c: Configuration, tol=None) -> UniformityReport:
    tol = det_tolerance(c, tol)
    for i in range(c.m):
        for j in range(i + 1, c.m):
            if abs(det2(c.vectors[i], c.vectors[j])) <= tol:
                return UniformityReport(False, (i, j))
    return UniformityReport(True, None)


def even_m_witness(c: Configuration, tol=None) -> int:
    """
    For a balanced configuration with an even number of vectors, return j >= 1
    with det(v_0, v_j) = 0: the row of v_0 is a symmetric multiset of odd size,
    so it contains 0.
    """
    if c.m % 2 == 1:
        raise OddM("m = {} is odd".format(c.m), {"m": c.m})
    report = is_balanced(c, tol)
    if not report.balanced:
        i, x = report.witness
        raise NotBalanced("row {} determinant multiset is not symmetric at {}".format(i, x), {"index": i, "value": x})
    for j in range(1, c.m):
        if abs(det2(c.vectors[0], c.vectors[j])) <= report.tol:
            return j
    # a symmetric multiset of odd size always holds 0
    raise RuntimeError("balanced even configuration without a zero determinant in row 0")
