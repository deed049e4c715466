"""
Command abstract class: turns a request Context into a Reply
"""
import os

from bridge.context import Context
from bridge.reply import Reply, ReplyType
from common import const
from common.config_file import load_configuration
from common.errors import PlaneBalanceError, UsageError
from geometry import Configuration


class Command(object):
    name = ""

    def reply(self, context: Context) -> Reply:
        """
        run the command
        :param context: request context, content is the input path if any
        :return: reply with report content and exit code
        """
        raise NotImplementedError

    def echo(self, context: Context) -> dict:
        body = {"command": self.name}
        if context.content is not None:
            body["input"] = os.path.basename(context.content)
        if "tol" in context:
            body["tol"] = context["tol"]
        return body

    def load(self, context: Context) -> Configuration:
        if context.content is None:
            raise UsageError("{} needs an input file".format(self.name))
        return load_configuration(context.content)

    def require(self, context: Context, key: str):
        value = context.get(key)
        if value is None:
            raise UsageError("{} needs --{}".format(self.name, key.replace("_", "-")))
        return value

    def report(self, context: Context, body: dict, holds: bool = True) -> Reply:
        content = self.echo(context)
        content.update(body)
        return Reply(ReplyType.REPORT, content, const.EXIT_HOLDS if holds else const.EXIT_FAILS)

    def failure(self, context: Context, error: PlaneBalanceError, exit_code: int) -> Reply:
        content = self.echo(context)
        content.update({"error": error.code, "message": error.message, "certificate": error.certificate})
        return Reply(ReplyType.ERROR, content, exit_code)
