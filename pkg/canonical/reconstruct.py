from common.errors import DegenerateStep, SingularFrame, UsageError
from common.log import logger
from config import conf
from geometry import ArithmeticMode, Configuration, PlaneVector, det2


def reconstruct_from_triple(v0: PlaneVector, vn: PlaneVector, vn1: PlaneVector, m: int, tol=None) -> Configuration:
    """
    Rebuild (v_0, .., v_{2n}) from v_0, v_n, v_{n+1}. With r = det(v_n, v_{n+1}) / det(v_0, v_n):

        v_i         = -v_{i-1} - r * v_{n+i}
        v_{n+i+1}   = -r * v_i - v_{n+i}        for i = 1 .. n-1
    """
    if m < 3 or m % 2 == 0:
        raise UsageError("m must be odd and >= 3, got {}".format(m), {"m": m})
    n = (m - 1) // 2
    exact = v0.mode == ArithmeticMode.EXACT
    scale = max(v0.norm(), vn.norm(), vn1.norm())
    if tol is None:
        tol = 0 if exact else conf().get("det_tol", 1e-12) * scale**2

    an = det2(v0, vn)
    if abs(an) <= tol:
        raise SingularFrame("det(v_0, v_n) = {} vanishes".format(an), {"det": an})
    r = det2(vn, vn1) / an

    vectors = [None] * m
    vectors[0], vectors[n], vectors[n + 1] = v0, vn, vn1
    for i in range(1, n):
        vectors[i] = -vectors[i - 1] - r * vectors[n + i]
        vectors[n + i + 1] = -(r * vectors[i]) - vectors[n + i]
        for v in (vectors[i], vectors[n + i + 1]):
            if v.is_zero() if exact else v.norm() <= conf().get("det_tol", 1e-12) * scale:
                raise DegenerateStep("step {} produced a zero vector".format(i), {"step": i})

    logger.debug("[Reconstruct] m={} r={}".format(m, r))
    return Configuration(tuple(vectors), v0.mode)
