# encoding:utf-8

from enum import Enum


class ContextType(Enum):
    CHECK = 1  # 平衡/一致性判定
    CANON = 2  # 规范形
    ROOTS = 3  # w_n(t) = U 的根与 t_k 网格
    GEN = 4  # 生成配置文件
    SEARCH = 5  # 穷举搜索
    RENDER = 6  # 画 svg
    LEMMAS = 7  # 逐条检查引理

    def __str__(self):
        return self.name


class Context:
    """
    One CLI request: `type` picks the command, `content` is the input path
    (None when the command reads no file), kwargs hold the parsed options.
    """

    def __init__(self, type: ContextType = None, content=None, kwargs=None):
        self.type = type
        self.content = content
        self.kwargs = kwargs if kwargs is not None else {}

    def __contains__(self, key):
        if key == "type":
            return self.type is not None
        elif key == "content":
            return self.content is not None
        else:
            return key in self.kwargs

    def __getitem__(self, key):
        if key == "type":
            return self.type
        elif key == "content":
            return self.content
        else:
            return self.kwargs[key]

    def get(self, key, default=None):
        try:
            return self[key]
        except KeyError:
            return default

    def __str__(self):
        return "Context(type={}, content={}, kwargs={})".format(self.type, self.content, self.kwargs)
