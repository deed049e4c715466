# encoding:utf-8

from enum import Enum

from common import const


class ReplyType(Enum):
    REPORT = 1  # json 报告
    CONFIG_FILE = 2  # 配置文件, content 为 Configuration
    SVG = 3  # svg 文本
    ERROR = 4  # 失败报告, 带证书或输入错误

    def __str__(self):
        return self.name


class Reply:
    def __init__(self, type: ReplyType = None, content=None, exit_code: int = const.EXIT_HOLDS):
        self.type = type
        self.content = content
        self.exit_code = exit_code

    def __str__(self):
        return "Reply(type={}, exit_code={}, content={})".format(self.type, self.exit_code, self.content)
