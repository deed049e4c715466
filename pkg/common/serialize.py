"""
Deterministic JSON for reports and configuration files.

Layout matches json.dumps(indent=2, sort_keys=True) but floats always carry
17 significant digits and exact rationals are written as "p/q" strings, so a
report is byte-stable across runs and platforms with the same libm.
"""
import json
import math
from enum import Enum
from fractions import Fraction

import numpy as np

from common import const

INDENT = "  "


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError("cannot serialize non-finite float {!r}".format(x))
    text = format(x, const.FLOAT_FORMAT)
    if not any(ch in text for ch in ".e"):
        # integral values keep a float marker: "-0.0", "100.0"
        return repr(x)
    return text


def format_fraction(x: Fraction) -> str:
    return str(x)


def _encode(value, level: int) -> str:
    if value is None:
        return "null"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return json.dumps(format_fraction(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if isinstance(value, Enum):
        return json.dumps(str(value))
    if isinstance(value, str):
        return json.dumps(value)

    pad, inner = INDENT * level, INDENT * (level + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = sorted(value.items(), key=lambda item: str(item[0]))
        body = ",\n".join("{}{}: {}".format(inner, json.dumps(str(k)), _encode(v, level + 1)) for k, v in items)
        return "{{\n{}\n{}}}".format(body, pad)
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        body = ",\n".join(inner + _encode(v, level + 1) for v in value)
        return "[\n{}\n{}]".format(body, pad)
    raise TypeError("cannot serialize {!r}".format(value))


def dumps(value) -> str:
    return _encode(value, 0) + "\n"
