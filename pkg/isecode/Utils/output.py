# isecode/Utils/output.py

import csv
import json
from fractions import Fraction
from io import StringIO
from typing import Any, Iterable, List, Sequence, Union
from pydantic import BaseModel
from isecode.Schemas.cli import OutputFormat
from isecode.Utils.rational import approx_text

Renderable = Union[BaseModel, Sequence[BaseModel]]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _text_value(value: Any) -> str:
    if isinstance(value, Fraction):
        return approx_text(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, BaseModel):
        return "{" + ", ".join(f"{k}: {_text_value(v)}" for k, v in _python_items(value)) + "}"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_text_value(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text_value(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


def _python_items(model: BaseModel) -> Iterable[tuple]:
    for name in type(model).model_fields:
        yield name, getattr(model, name)


def render_csv(rows: Sequence[BaseModel]) -> str:
    out = StringIO()
    if not rows:
        return ""
    dumped = [row.model_dump(mode="json") for row in rows]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(list(dumped[0].keys()))
    for row in dumped:
        writer.writerow([_cell(v) for v in row.values()])
    return out.getvalue()


def render(payload: Renderable, fmt: OutputFormat) -> str:
    rows: List[BaseModel] = list(payload) if not isinstance(payload, BaseModel) else [payload]
    if fmt == OutputFormat.JSON:
        if isinstance(payload, BaseModel):
            return payload.model_dump_json(indent=2)
        return json.dumps([row.model_dump(mode="json") for row in rows], indent=2)
    if fmt == OutputFormat.CSV:
        return render_csv(rows)
    blocks = []
    for row in rows:
        blocks.append("\n".join(f"{name}: {_text_value(value)}" for name, value in _python_items(row)))
    return "\n\n".join(blocks)

