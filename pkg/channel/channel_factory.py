"""
channel factory
"""
from common import const

from .channel import Channel


def create_channel(channel_type) -> Channel:
    """
    create a channel instance
    :param channel_type: channel type code
    :return: channel instance
    """
    if channel_type == const.TERMINAL:
        from channel.terminal.terminal_channel import TerminalChannel

        ch = TerminalChannel()
    elif channel_type == const.FILE:
        from channel.file.file_channel import FileChannel

        ch = FileChannel()
    else:
        raise RuntimeError("unknown channel type {}".format(channel_type))
    ch.channel_type = channel_type
    return ch
