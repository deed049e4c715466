import os

from bridge.context import Context
from bridge.reply import Reply, ReplyType
from command.command import Command
from common import const
from common.svg import render_svg


class RenderCommand(Command):
    name = const.RENDER

    def reply(self, context: Context) -> Reply:
        c = self.load(context)
        if context.get("format") == "json":
            return Reply(ReplyType.CONFIG_FILE, c)
        return Reply(ReplyType.SVG, render_svg(c, title=os.path.basename(context.content)))
