"""
Model schema document: canonical JSON export and import of a ClassModel.

Layout::

    {"version": 1,
     "classes": [{"fqn", "package", "kind", "external", "parents",
                  "fields": [{"name", "type"}],
                  "methods": [{"name", "arity", "params", "returns", "uses",
                               "calls": [{"class", "method", "arity", "resolved"}]}]}]}

Every set is written sorted, so equal models export to identical bytes.
"""

import json
import logging
from typing import Any, Dict, Union

from pydantic import ValidationError

from ..errors import InvalidModelError, ModelFormatError
from .class_model import ClassInfo, ClassModel, MethodInfo
from .validation import validate

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def _method_doc(method: MethodInfo) -> Dict[str, Any]:
    calls = sorted(method.calls, key=lambda c: (c.key, c.resolved))
    return {
        "name": method.name,
        "arity": method.arity,
        "params": list(method.param_types),
        "returns": method.return_type,
        "uses": sorted(method.attributes_used),
        "calls": [
            {"class": c.target_class, "method": c.target_method, "arity": c.arity, "resolved": c.resolved}
            for c in calls
        ],
    }


def _class_doc(info: ClassInfo) -> Dict[str, Any]:
    return {
        "fqn": info.fqn,
        "package": info.package,
        "kind": info.kind,
        "external": info.is_external,
        "parents": list(info.parents),
        "fields": [{"name": f.name, "type": f.declared_type} for f in info.fields],
        "methods": [_method_doc(m) for m in info.methods],
    }


def model_to_dict(model: ClassModel) -> Dict[str, Any]:
    """Canonical dictionary form of a model (no validation)."""
    return {"version": SCHEMA_VERSION, "classes": [_class_doc(c) for c in model.classes]}


def export_model(model: ClassModel) -> bytes:
    """
    Serialise a valid model to its canonical schema document.

    Raises:
        InvalidModelError: the model violates an invariant; the diagnostics
            are attached to the exception.
    """
    problems = validate(model)
    if problems:
        raise InvalidModelError("refusing to export an invalid model", problems)
    text = json.dumps(model_to_dict(model), indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def _position(text: str, offset: int) -> tuple:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def import_model(doc: Union[bytes, str]) -> ClassModel:
    """
    Parse a schema document into a validated ClassModel.

    Raises:
        ModelFormatError: the document is not well-formed JSON or does not
            follow the schema; carries the line and column when known.
        InvalidModelError: the document is well-formed but the model it
            describes violates an invariant.
    """
    if isinstance(doc, bytes):
        try:
            text = doc.decode("utf-8")
        except UnicodeDecodeError as e:
            raw = doc[: e.start].decode("utf-8", errors="replace")
            line, column = _position(raw, len(raw))
            raise ModelFormatError("document is not valid UTF-8", line, column) from e
    else:
        text = doc

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelFormatError(e.msg, e.lineno, e.colno) from e

    if not isinstance(data, dict):
        raise ModelFormatError("top level must be an object")
    unknown = sorted(set(data) - {"version", "classes"})
    if unknown:
        raise ModelFormatError(f"unknown top-level key(s): {', '.join(unknown)}")
    if data.get("version") != SCHEMA_VERSION:
        raise ModelFormatError(f"unsupported schema version {data.get('version')!r}")

    try:
        model = ClassModel.model_validate({"classes": data.get("classes", [])})
    except ValidationError as e:
        first = e.errors()[0]
        path = ".".join(str(part) for part in first["loc"])
        raise ModelFormatError(f"schema violation at {path}: {first['msg']}") from e

    problems = validate(model)
    if problems:
        raise InvalidModelError("model document violates invariants", problems)

    logger.info(f"Imported model with {len(model.classes)} classes")
    return model
