"""
Output channel abstract class
"""

from bridge.bridge import Bridge
from bridge.context import Context
from bridge.reply import Reply, ReplyType
from common.config_file import serialize_configuration
from common.serialize import dumps


class Channel(object):
    channel_type = ""

    # 统一的发送函数，每个Channel自行实现，根据reply的type字段决定写到哪里
    def send(self, reply: Reply, context: Context):
        """
        deliver a reply
        :param reply: reply from the bridge
        :param context: the request it answers
        """
        raise NotImplementedError

    def handle(self, context: Context) -> int:
        reply = self.build_reply(context)
        self.send(reply, context)
        return reply.exit_code

    def build_reply(self, context: Context) -> Reply:
        return Bridge().fetch_reply(context)

    @staticmethod
    def render(reply: Reply) -> str:
        if reply.type == ReplyType.SVG:
            return reply.content
        if reply.type == ReplyType.CONFIG_FILE:
            return serialize_configuration(reply.content)
        return dumps(reply.content)
