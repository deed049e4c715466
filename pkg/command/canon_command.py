from bridge.context import Context
from bridge.reply import Reply
from canonical import canonicalize
from command.command import Command
from common import const
from common.log import logger


class CanonCommand(Command):
    name = const.CANON

    def reply(self, context: Context) -> Reply:
        c = self.load(context)
        form = canonicalize(c, context.get("tol"))
        body = {
            "m": c.m,
            "mode": c.mode,
            "k": form.k,
            "t": float(form.t),
            "t_exact": form.t_exact,
            "residual": form.residual,
            "map": form.g.rows(),
            "frame_map": form.frame.rows(),
            "index_map": list(form.index_map),
            "permutation": list(form.labeled.permutation),
        }
        logger.info("[Canon] m={} k={} residual={:.3g}".format(c.m, form.k, form.residual))
        return self.report(context, body)
