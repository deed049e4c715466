"""
Structural checks on one balanced uniform configuration with odd m: the
antisymmetry relation, constant step determinants, half-plane counts, the
pairing map and its closed form. Every check runs; the first failure sets the
exit code.
"""
from balance import build_pairing, half_plane_counts, step_constants, verify_antisymmetry, verify_pairing_formula
from bridge.context import Context
from bridge.reply import Reply
from command.command import Command
from common import const
from common.errors import CERTIFICATE_ERRORS, UsageError
from common.log import logger
from geometry import label_by_increasing_arguments


def _failed(error) -> dict:
    return {"holds": False, "error": error.code, "certificate": error.certificate}


class LemmasCommand(Command):
    name = const.LEMMAS

    def reply(self, context: Context) -> Reply:
        c = self.load(context)
        if c.m < 3 or c.m % 2 == 0:
            raise UsageError("lemmas needs an odd number of vectors m >= 3, got {}".format(c.m), {"m": c.m})
        tol = context.get("tol")
        labeled = label_by_increasing_arguments(c)
        n = labeled.n
        checks = {}

        verdict = verify_antisymmetry(labeled, tol)
        checks["antisymmetry"] = {
            "holds": verdict.passed,
            "witness": None if verdict.witness is None else {"k": verdict.witness[0], "a": verdict.witness[1]},
        }

        try:
            constants = step_constants(labeled, tol)
            checks["step_constants"] = {"holds": True, "A1": constants.A1, "An": constants.An}
        except CERTIFICATE_ERRORS as e:
            checks["step_constants"] = _failed(e)

        counts = list(half_plane_counts(labeled, tol))
        checks["half_plane_counts"] = {"holds": all(count == n for count in counts), "counts": counts}

        try:
            pairing = build_pairing(labeled, tol)
            formula = verify_pairing_formula(pairing)
            checks["pairing"] = {"holds": pairing(0, 1) == n + 1, "phi": pairing.as_rows()}
            checks["pairing_formula"] = {
                "holds": formula.passed,
                "witness": None if formula.witness is None else {"u": formula.witness[0], "phi": formula.witness[1]},
            }
        except CERTIFICATE_ERRORS as e:
            checks["pairing"] = _failed(e)

        holds = all(check["holds"] for check in checks.values())
        logger.info("[Lemmas] m={} holds={}".format(c.m, holds))
        body = {"m": c.m, "mode": c.mode, "permutation": list(labeled.permutation), "checks": checks, "holds": holds}
        return self.report(context, body, holds)
