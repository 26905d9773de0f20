"""Read and write the JSON building-model format.

The decoder is driven by the dataclass definitions in :mod:`ecodom.model`, so
the file format mirrors the model field for field.  Unknown keys are rejected.
"""

from __future__ import annotations

import dataclasses
import json
import math
import typing
from dataclasses import MISSING, dataclass
from enum import Enum
from typing import Any, Union

from .model import BuildingModel, Color, ValidationError, validate_model

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SourceLocation:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


class ParseError(ValueError):
    """The document could not be turned into a :class:`BuildingModel`."""

    def __init__(self, path: str, message: str):
        self.location = SourceLocation(path or "$", message)
        super().__init__(str(self.location))


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _optional_arg(tp: Any) -> Any:
    """Return X for Optional[X], otherwise None."""
    if typing.get_origin(tp) is Union:
        args = [a for a in typing.get_args(tp) if a is not type(None)]
        if len(args) == 1:
            return args[0]
    return None


def _decode(tp: Any, value: Any, path: str) -> Any:
    inner = _optional_arg(tp)
    if inner is not None:
        return None if value is None else _decode(inner, value, path)
    if value is None:
        raise ParseError(path, "must not be null")

    if typing.get_origin(tp) is tuple:
        (item_tp, _ellipsis) = typing.get_args(tp)
        if not isinstance(value, list):
            raise ParseError(path, f"expected an array, got {type(value).__name__}")
        return tuple(_decode(item_tp, v, f"{path}[{i}]") for i, v in enumerate(value))

    if dataclasses.is_dataclass(tp):
        return _decode_object(tp, value, path)

    if tp is Color and isinstance(value, (int, float)) and not isinstance(value, bool):
        if not 0.0 <= value <= 1.0:
            raise ParseError(path, f"absorptivity must be within [0, 1], got {value!r}")
        return Color.from_alpha(float(value))

    if isinstance(tp, type) and issubclass(tp, Enum):
        allowed = [m.value for m in tp]
        if value not in allowed:
            raise ParseError(path, f"unknown value {value!r}; allowed: {', '.join(map(str, allowed))}")
        return tp(value)

    if tp is bool:
        if not isinstance(value, bool):
            raise ParseError(path, f"expected a boolean, got {type(value).__name__}")
        return value
    if tp is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError(path, f"expected a number, got {type(value).__name__}")
        if not math.isfinite(value):
            raise ParseError(path, "must be finite")
        return float(value)
    if tp is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError(path, f"expected an integer, got {type(value).__name__}")
        return value
    if tp is str:
        if not isinstance(value, str):
            raise ParseError(path, f"expected a string, got {type(value).__name__}")
        return value
    raise TypeError(f"unsupported field type {tp!r}")  # pragma: no cover


def _decode_object(cls: type, value: Any, path: str) -> Any:
    if not isinstance(value, dict):
        raise ParseError(path, f"expected an object, got {type(value).__name__}")
    hints = typing.get_type_hints(cls)
    fields = dataclasses.fields(cls)
    names = {f.name for f in fields}
    for key in value:
        if key not in names:
            raise ParseError(_join(path, key), f"unknown field; allowed: {', '.join(sorted(names))}")
    kwargs = {}
    for f in fields:
        fpath = _join(path, f.name)
        if f.name not in value:
            if f.default is MISSING and f.default_factory is MISSING:
                raise ParseError(fpath, "missing required field")
            continue
        kwargs[f.name] = _decode(hints[f.name], value[f.name], fpath)
    return cls(**kwargs)


def _reject_constant(token: str) -> float:
    raise ValueError(f"non-standard JSON constant {token}")


def parse_building(text: str) -> BuildingModel:
    """Parse a building document.

    Raises :class:`ParseError` on the first structural problem.  Semantic
    invariants are left to :func:`parse_and_validate`.
    """
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except (json.JSONDecodeError, ValueError) as exc:
        raise ParseError("$", f"malformed JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("$", "top level must be an object")
    if "schema_version" not in data:
        raise ParseError("schema_version", "missing required field")
    if data["schema_version"] != SCHEMA_VERSION or isinstance(data["schema_version"], bool):
        raise ParseError("schema_version",
                         f"unsupported schema version {data['schema_version']!r}; expected {SCHEMA_VERSION}")
    return _decode_object(BuildingModel, data, "")


def parse_and_validate(text: str) -> tuple[BuildingModel, list[ValidationError]]:
    model = parse_building(text)
    return model, validate_model(model)


def _encode(value: Any) -> Any:
    if dataclasses.is_dataclass(value):
        return {f.name: _encode(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (tuple, list)):
        return [_encode(v) for v in value]
    return value


def format_number(x: float) -> str:
    """Fixed 4-decimal rendering, widened only when 4 decimals would lose data."""
    fixed = f"{x:.4f}"
    if float(fixed) == x:
        return fixed
    return repr(float(x))


def dumps_canonical(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """Deterministic JSON: sorted keys, fixed float formatting, explicit nulls."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: "
                 f"{dumps_canonical(obj[k], indent, _level + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps_canonical(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, float):
        return format_number(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def model_to_dict(model: BuildingModel) -> dict:
    return _encode(model)


def serialize_building(model: BuildingModel) -> str:
    return dumps_canonical(model_to_dict(model)) + "\n"


def _describe(tp: Any) -> Any:
    inner = _optional_arg(tp)
    if inner is not None:
        d = _describe(inner)
        return {"optional": d}
    if typing.get_origin(tp) is tuple:
        return [_describe(typing.get_args(tp)[0])]
    if dataclasses.is_dataclass(tp):
        hints = typing.get_type_hints(tp)
        return {f.name: _describe(hints[f.name]) for f in dataclasses.fields(tp)}
    if tp is Color:
        return "one of: light, medium, dark (or a number: absorptivity in [0, 1])"
    if isinstance(tp, type) and issubclass(tp, Enum):
        return "one of: " + ", ".join(m.value for m in tp)
    return {bool: "boolean", float: "number", int: "integer", str: "string"}[tp]


def schema_description() -> dict:
    """Field-by-field description of the input document, derived from the model."""
    return _describe(BuildingModel)
