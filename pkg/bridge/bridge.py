import time

from bridge.context import Context, ContextType
from bridge.reply import Reply
from command.command_factory import create_command
from common import const
from common.errors import CERTIFICATE_ERRORS, PlaneBalanceError
from common.log import logger
from common.singleton import singleton
from config import conf


@singleton
class Bridge(object):
    def __init__(self):
        self.commands = {}

    # 每种请求对应一个命令实例
    def get_command(self, command_type: ContextType):
        if self.commands.get(command_type) is None:
            logger.debug("[Bridge] create command {}".format(command_type))
            self.commands[command_type] = create_command(command_type)
        return self.commands[command_type]

    def fetch_reply(self, context: Context) -> Reply:
        command = self.get_command(context.type)
        start = time.perf_counter()
        try:
            reply = command.reply(context)
        except CERTIFICATE_ERRORS as e:
            logger.info("[Bridge] {} fails: {}: {}".format(context.type, e.code, e))
            reply = command.failure(context, e, const.EXIT_FAILS)
        except PlaneBalanceError as e:
            logger.error("[Bridge] {} input error: {}: {}".format(context.type, e.code, e))
            reply = command.failure(context, e, const.EXIT_USAGE)

        if conf().get("report_timing") and isinstance(reply.content, dict):
            reply.content["timing_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
        return reply
