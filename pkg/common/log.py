import logging
import sys

_FORMAT = "[%(levelname)s][%(asctime)s][%(filename)s:%(lineno)d] - %(message)s"
_DATEFMT = "%Y-%m-%d %H:%M:%S"


def _reset_logger(log):
    for handler in log.handlers:
        handler.close()
        log.removeHandler(handler)
        del handler
    log.handlers.clear()
    log.propagate = False
    # stdout is reserved for reports
    console_handle = logging.StreamHandler(sys.stderr)
    console_handle.setFormatter(logging.Formatter(_FORMAT, datefmt=_DATEFMT))
    log.addHandler(console_handle)


def _get_logger():
    log = logging.getLogger("log")
    _reset_logger(log)
    log.setLevel(logging.INFO)
    return log


def add_file_handler(path: str):
    for handler in logger.handlers:
        if isinstance(handler, logging.FileHandler) and handler.baseFilename.endswith(path):
            return
    file_handle = logging.FileHandler(path, encoding="utf-8")
    file_handle.setFormatter(logging.Formatter(_FORMAT, datefmt=_DATEFMT))
    logger.addHandler(file_handle)


# 日志句柄
logger = _get_logger()
