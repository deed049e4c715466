import sys

from bridge.context import Context
from bridge.reply import Reply, ReplyType
from channel.channel import Channel
from common.log import logger


class FileChannel(Channel):
    """Writes the reply to --out; error reports still go to stdout."""

    def send(self, reply: Reply, context: Context):
        text = self.render(reply)
        if reply.type == ReplyType.ERROR:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        path = context["out"]
        with open(path, mode="w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info("[FileChannel] wrote {} to {}".format(reply.type, path))
