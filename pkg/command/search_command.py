from fractions import Fraction

from balance import is_uniform
from bridge.context import Context
from bridge.reply import Reply
from command.command import Command
from common import const
from common.config_file import configuration_document
from common.errors import UsageError
from common.log import logger
from search import SearchSpec, enumerate_balanced


def parse_coords(text: str):
    try:
        return tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError("--coords must be a comma separated list of rationals, got {!r}".format(text))


class SearchCommand(Command):
    name = const.SEARCH

    def reply(self, context: Context) -> Reply:
        spec = SearchSpec(
            m=self.require(context, "m"),
            coordinate_set=parse_coords(self.require(context, "coords")),
            require_uniform=bool(context.get("require_uniform", False)),
            dedupe=not context.get("no_dedupe", False),
        )
        hits = enumerate_balanced(spec)
        uniform_count = sum(1 for c in hits if is_uniform(c).uniform)
        summary = "{} balanced, {} uniform".format(len(hits), uniform_count)
        logger.info("[Search] {}".format(summary))

        body = {
            "m": spec.m,
            "coords": list(spec.coordinate_set),
            "require_uniform": spec.require_uniform,
            "dedupe": spec.dedupe,
            "configurations": [configuration_document(c) for c in hits],
            "summary": {
                "candidates": spec.candidate_count(),
                "balanced": len(hits),
                "uniform": uniform_count,
                "text": summary,
            },
        }
        return self.report(context, body)
