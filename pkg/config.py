# encoding:utf-8

import ast
import json
import logging
import os

from common.log import add_file_handler, logger

# 将所有可用的配置项写在字典里, 请使用小写字母
# 全局config以这些值为默认值, config.json 和环境变量可以覆盖
available_setting = {
    # 浮点模式下的容差
    "det_tol": 1e-12,  # 行列式判零的绝对容差(先把输入缩放到 max|v_i| = 1)
    "balance_rel_tol": 1e-9,  # 平衡判定的相对容差, 乘以 max|det|
    "argument_tie_tol": 1e-12,  # 两个辐角相差小于该值视为相同
    "normalize_tol": 1e-9,  # extract_t 中 |p.y + 1| 的容差
    "grid_tol": 1e-6,  # t_C 与 t_k 网格匹配的容差
    "residual_tol": 1e-8,  # 规范化残差上限
    "closure_tol": 1e-10,  # w_n(t_k) = U, u_n(t_k) = V 的闭合容差
    # 多项式实根隔离
    "root_width": 1e-12,  # 根区间的认证宽度
    "root_filter_tol": 1e-9,  # |x*(w_n)(t) - 1| 的过滤容差
    # 随机映射与搜索
    "cond_max": 100.0,  # random_invertible 的条件数上限
    "search_budget": 10**7,  # 枚举候选数上限
    "search_workers": 1,  # 枚举并发数
    # 输出
    "report_timing": False,  # 报告中是否写入耗时, 打开后报告不再逐字节稳定
    "svg_canvas": 800,  # svg 画布边长
    "debug": False,  # 是否开启debug模式，开启后会打印更多日志
    "log_file": "",  # 日志文件, 为空则只输出到stderr
}


class Config(dict):
    def __init__(self, d=None):
        super().__init__()
        if d is None:
            d = {}
        for k, v in d.items():
            self[k] = v

    def __getitem__(self, key):
        if key not in available_setting:
            raise Exception("key {} not in available_setting".format(key))
        return super().__getitem__(key)

    def __setitem__(self, key, value):
        if key not in available_setting:
            raise Exception("key {} not in available_setting".format(key))
        return super().__setitem__(key, value)

    def get(self, key, default=None):
        try:
            return self[key]
        except KeyError as e:
            return default
        except Exception as e:
            raise e


config = Config(available_setting)


def _parse_env_value(value: str):
    try:
        return ast.literal_eval(value)
    except (ValueError, SyntaxError):
        if value == "false":
            return False
        if value == "true":
            return True
        return value


def load_config(config_path: str = None):
    global config
    if config_path is None:
        config_path = "./config.json"
        if not os.path.exists(config_path):
            logger.debug("[INIT] config.json not found, use config-template.json")
            config_path = "./config-template.json"

    values = dict(available_setting)
    if os.path.exists(config_path):
        config_str = read_file(config_path)
        logger.debug("[INIT] config str: {}".format(config_str))
        values.update(json.loads(config_str))
    else:
        logger.debug("[INIT] no config file at {}, keep defaults".format(config_path))

    config = Config(values)

    # override config with environment variables.
    for name, value in os.environ.items():
        name = name.lower()
        if name in available_setting:
            logger.info("[INIT] override config by environ args: {}={}".format(name, value))
            config[name] = _parse_env_value(value)

    if config.get("debug", False):
        logger.setLevel(logging.DEBUG)
        logger.debug("[INIT] set log level to DEBUG")
    if config.get("log_file"):
        add_file_handler(config.get("log_file"))

    logger.debug("[INIT] load config: {}".format(config))
    return config


def read_file(path):
    with open(path, mode="r", encoding="utf-8") as f:
        return f.read()


def conf():
    return config
