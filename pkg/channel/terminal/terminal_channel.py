import sys

from bridge.context import Context
from bridge.reply import Reply
from channel.channel import Channel


class TerminalChannel(Channel):
    """Reports go to stdout, logs stay on stderr."""

    def send(self, reply: Reply, context: Context):
        sys.stdout.write(self.render(reply))
        sys.stdout.flush()
