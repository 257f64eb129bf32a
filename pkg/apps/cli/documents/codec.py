"""
JSON parse/emit for documents with line and field diagnostics
"""
import json
import logging
import re
from pathlib import Path
from typing import Any, Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from packages.strata.errors import DocumentError

from ..core.config import settings
from .models import FunctionDocument, MapDocument, SpaceDocument

logger = logging.getLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)


def _field_path(loc) -> str:
    parts = []
    for item in loc:
        if isinstance(item, int):
            parts.append(f"[{item}]")
        else:
            parts.append(f".{item}" if parts else str(item))
    return "".join(parts)


_WHITESPACE = re.compile(r"[ \t\n\r]*")
_DECODER = json.JSONDecoder()


def _skip(text: str, pos: int) -> int:
    return _WHITESPACE.match(text, pos).end()


def _step(text: str, pos: int, item) -> Optional[int]:
    """Offset of the value item names inside the container at pos, or None"""
    if isinstance(item, int):
        if text[pos] != "[":
            return None
        pos = _skip(text, pos + 1)
        for _ in range(item):
            _, pos = _DECODER.raw_decode(text, pos)
            pos = _skip(text, pos)
            if text[pos] != ",":
                return None
            pos = _skip(text, pos + 1)
        return pos if text[pos] != "]" else None
    if text[pos] != "{":
        return None
    pos = _skip(text, pos + 1)
    while text[pos] == '"':
        key, pos = _DECODER.raw_decode(text, pos)
        pos = _skip(text, _skip(text, pos) + 1)
        if key == item:
            return pos
        _, pos = _DECODER.raw_decode(text, pos)
        pos = _skip(text, pos)
        if text[pos] == ",":
            pos = _skip(text, pos + 1)
    return None


def _locate(text: str, loc) -> Optional[int]:
    """
    Line of the value loc points at, walking the path through the JSON text.
    Stops at the deepest container reached when a step is not in the text
    (a missing field, or a pydantic tag such as a union member name).
    """
    if not loc:
        return None
    try:
        pos = _skip(text, 0)
        for item in loc:
            found = _step(text, pos, item)
            if found is None:
                break
            pos = found
    except (ValueError, IndexError):
        return None
    return text.count("\n", 0, pos) + 1


def parse(model: Type[Model], text: str, path: Optional[str] = None) -> Model:
    """
    Parse a JSON document into model.

    Raises:
        DocumentError: malformed JSON (with line) or schema violation (with field path)
    """
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, path=path, line=e.lineno) from e
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        loc = first.get("loc", ())
        raise DocumentError(
            first.get("msg", "invalid document"),
            path=path,
            line=_locate(text, loc),
            field=_field_path(loc) or None,
        ) from e


def emit(document: BaseModel) -> str:
    """Canonical JSON text: sorted keys, fixed indent, trailing newline"""
    data = document.model_dump(mode="json", by_alias=True, exclude_none=True)
    return json.dumps(data, sort_keys=True, indent=settings.JSON_INDENT, ensure_ascii=False) + "\n"


def read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read file: {e.strerror}", path=path) from e


def parse_space(text: str, path: Optional[str] = None) -> SpaceDocument:
    return parse(SpaceDocument, text, path)


def parse_map(text: str, path: Optional[str] = None) -> MapDocument:
    return parse(MapDocument, text, path)


def parse_function(text: str, path: Optional[str] = None) -> FunctionDocument:
    return parse(FunctionDocument, text, path)


def is_map_text(text: str) -> bool:
    """A document with a kernel field is a map; anything else is read as a space."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return False
    return isinstance(data, dict) and "kernel" in data
