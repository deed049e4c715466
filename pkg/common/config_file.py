"""
ConfigFile: the JSON interchange format for a configuration.

    {"mode": "exact", "vectors": [["1", "0"], ["-1/2", "3/4"]]}
    {"mode": "float", "vectors": [[1.0, 0.0], [-0.5, 0.866]]}

Exact coordinates are strings holding integers or "p/q" rationals; float
coordinates are JSON numbers. Vector order is preserved and no vector may be zero.
"""
import json
import math
import os
from fractions import Fraction
from typing import List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, StrictFloat, StrictInt, StrictStr, ValidationError, ValidationInfo, field_validator

from common.errors import ConfigFileError
from common.serialize import dumps
from geometry import ArithmeticMode, Configuration, PlaneVector

Coordinate = Union[StrictStr, StrictInt, StrictFloat]


def _parse_exact(value) -> Fraction:
    if not isinstance(value, str):
        raise ValueError("exact coordinates must be strings like \"3/4\", got {!r}".format(value))
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError("{!r} is not an integer or rational p/q".format(value))


def _parse_float(value) -> float:
    if isinstance(value, str):
        raise ValueError("float coordinates must be JSON numbers, got {!r}".format(value))
    value = float(value)
    if not math.isfinite(value):
        raise ValueError("coordinate {!r} is not finite".format(value))
    return value


class ConfigFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mode: Literal["exact", "float"]
    vectors: List[Tuple[Coordinate, Coordinate]]

    @field_validator("vectors")
    @classmethod
    def check_vectors(cls, vectors, info: ValidationInfo):
        if not vectors:
            raise ValueError("at least one vector is required")
        mode = info.data.get("mode")
        if mode is None:
            return vectors
        parse = _parse_exact if mode == "exact" else _parse_float
        for i, (x, y) in enumerate(vectors):
            try:
                px, py = parse(x), parse(y)
            except ValueError as e:
                raise ValueError("vector {}: {}".format(i, e))
            if px == 0 and py == 0:
                raise ValueError("vector {} is zero".format(i))
        return vectors

    def to_configuration(self) -> Configuration:
        parse = _parse_exact if self.mode == "exact" else _parse_float
        return Configuration(tuple(PlaneVector(parse(x), parse(y)) for x, y in self.vectors), ArithmeticMode(self.mode))


def _field_errors(error: ValidationError) -> str:
    return "; ".join("{}: {}".format(".".join(str(part) for part in e["loc"]) or "<root>", e["msg"]) for e in error.errors())


def parse_configuration(text: str, source: str = "<input>") -> Configuration:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigFileError(
            "{}: line {} column {}: {}".format(source, e.lineno, e.colno, e.msg), {"line": e.lineno, "column": e.colno}
        )
    try:
        model = ConfigFile.model_validate(data)
    except ValidationError as e:
        raise ConfigFileError("{}: {}".format(source, _field_errors(e)), {"fields": [list(err["loc"]) for err in e.errors()]})
    return model.to_configuration()


def load_configuration(path: str) -> Configuration:
    try:
        with open(path, mode="r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ConfigFileError("cannot read {}: {}".format(path, e.strerror or e), {"path": os.path.basename(path)})
    return parse_configuration(text, os.path.basename(path))


def configuration_document(c: Configuration) -> dict:
    """ConfigFile as a plain dict ready for common.serialize."""
    if c.mode == ArithmeticMode.EXACT:
        vectors = [[v.x, v.y] for v in c.vectors]
    else:
        vectors = [[float(v.x), float(v.y)] for v in c.vectors]
    return {"mode": str(c.mode), "vectors": vectors}


def serialize_configuration(c: Configuration) -> str:
    return dumps(configuration_document(c))
