from bridge.context import Context
from bridge.reply import Reply
from command.command import Command
from common import const
from common.errors import UsageError
from common.log import logger
from config import conf
from recurrence import symbolic_sequences, t_grid, wn_equation_roots


class RootsCommand(Command):
    name = const.ROOTS

    def reply(self, context: Context) -> Reply:
        n, m = context.get("n"), context.get("m")
        if (n is None) == (m is None):
            raise UsageError("roots needs exactly one of --n or --m")
        if m is not None:
            if m < 3 or m % 2 == 0:
                raise UsageError("--m must be odd and >= 3, got {}".format(m), {"m": m})
            n = (m - 1) // 2
        if n < 1:
            raise UsageError("--n must be >= 1, got {}".format(n), {"n": n})

        roots = wn_equation_roots(n)
        grid = t_grid(2 * n + 1)
        deviation = max(abs(a - b) for a, b in zip(roots.values, grid.values))
        _, ws = symbolic_sequences(n)
        body = {
            "m": 2 * n + 1,
            "n": n,
            "roots": list(roots.values),
            "grid": list(grid.values),
            "deviation": deviation,
            "w_n": {"x": list(ws[n].x.coeffs), "y": list(ws[n].y.coeffs)},
        }
        logger.info("[Roots] n={} deviation={:.3g}".format(n, deviation))
        return self.report(context, body, deviation <= conf().get("closure_tol", 1e-10))
