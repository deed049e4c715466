from balance import even_m_witness, is_balanced, is_uniform, step_constants
from bridge.context import Context
from bridge.reply import Reply
from command.command import Command
from common import const
from common.log import logger
from geometry import label_by_increasing_arguments


class CheckCommand(Command):
    name = const.CHECK

    def reply(self, context: Context) -> Reply:
        c = self.load(context)
        tol = context.get("tol")
        balance = is_balanced(c, tol)
        uniform = is_uniform(c, tol)

        constants = None
        if balance.balanced and uniform.uniform and c.m >= 3 and c.m % 2 == 1:
            found = step_constants(label_by_increasing_arguments(c), tol)
            constants = {"A1": found.A1, "An": found.An}

        body = {
            "m": c.m,
            "mode": c.mode,
            "balanced": balance.balanced,
            "balance_witness": None if balance.witness is None else {"index": balance.witness[0], "value": balance.witness[1]},
            "rows": [list(row) for row in balance.rows],
            "uniform": uniform.uniform,
            "uniform_witness": None if uniform.witness is None else list(uniform.witness),
            "even_m_witness": even_m_witness(c, tol) if balance.balanced and c.m % 2 == 0 else None,
            "step_constants": constants,
        }
        logger.info("[Check] m={} balanced={} uniform={}".format(c.m, balance.balanced, uniform.uniform))
        return self.report(context, body, balance.balanced)
