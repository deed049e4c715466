import numpy as np

from bridge.context import Context
from bridge.reply import Reply, ReplyType
from canonical import apply_map
from command.command import Command
from common import const
from common.errors import UsageError
from common.log import logger
from common.svg import render_svg
from geometry import roots_of_unity
from recurrence import model_configuration
from search import random_invertible


class GenCommand(Command):
    """
    U_m, or with --k the model configuration at t_k; --seed applies a random
    invertible map and shuffles member order.
    """

    name = const.GEN

    def reply(self, context: Context) -> Reply:
        m = self.require(context, "m")
        k = context.get("k")
        seed = context.get("seed")
        if k is not None:
            c = model_configuration(m, k)
        else:
            if m < 1:
                raise UsageError("--m must be >= 1, got {}".format(m), {"m": m})
            c = roots_of_unity(m)

        if seed is not None:
            c = apply_map(random_invertible(seed), c)
            order = np.random.default_rng(seed).permutation(c.m)
            c = c.permuted([int(i) for i in order])
        logger.info("[Gen] m={} k={} seed={}".format(m, k, seed))

        if context.get("format") == "svg":
            return Reply(ReplyType.SVG, render_svg(c))
        return Reply(ReplyType.CONFIG_FILE, c)
