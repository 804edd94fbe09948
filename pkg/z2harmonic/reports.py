"""Report records and their plain, JSON and CSV renderings.

Structured schema (JSON, keys in this order):

  command    subcommand path, e.g. "neck index"
  status     ok | criterion_failed | discrepancy | numerical_error | invalid_input
  inputs     echoed arguments
  outputs    computed values
  citations  free-text references, preserved verbatim

Exact rationals are written as "p/q" strings (always with a denominator) and
complex numbers as {"re": x, "im": y}. Text values that would read back as
a rational, or that start with an apostrophe, are written with a leading
apostrophe, so "1/2" as text becomes "'1/2". CSV rows are (section, key, value)
with nested values JSON-encoded in the value cell.
"""
import csv
import dataclasses
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .commons import RATIONAL_RE, InvalidInputError, fraction_str

STATUS_OK = "ok"
STATUS_CRITERION_FAILED = "criterion_failed"
STATUS_DISCREPANCY = "discrepancy"
STATUS_NUMERICAL_ERROR = "numerical_error"
STATUS_INVALID_INPUT = "invalid_input"

FORMATS = ("plain", "json", "csv")


@dataclass
class Report:
  command: str
  inputs: dict = field(default_factory=dict)
  outputs: dict = field(default_factory=dict)
  citations: list = field(default_factory=list)
  status: str = STATUS_OK


TEXT_MARK = "'"


def encode(value):
  if isinstance(value, str):
    # text that would read back as a rational, or already starts with the mark, gets marked
    if RATIONAL_RE.match(value) or value.startswith(TEXT_MARK):
      return TEXT_MARK + value
    return value
  if isinstance(value, bool) or value is None:
    return value
  if isinstance(value, Fraction):
    return fraction_str(value)
  if isinstance(value, (int, np.integer)):
    return int(value)
  if isinstance(value, (float, np.floating)):
    return float(value)
  if isinstance(value, complex):
    return {"re": value.real, "im": value.imag}
  if isinstance(value, dict):
    return {str(k): encode(v) for k, v in value.items()}
  if isinstance(value, (list, tuple, np.ndarray)):
    return [encode(v) for v in value]
  if dataclasses.is_dataclass(value):
    return {f.name: encode(getattr(value, f.name)) for f in dataclasses.fields(value)}
  return str(value)


def decode(value):
  if isinstance(value, str):
    if value.startswith(TEXT_MARK):
      return value[len(TEXT_MARK):]
    if RATIONAL_RE.match(value):
      return Fraction(value)
    return value
  if isinstance(value, dict):
    if set(value) == {"re", "im"}:
      return complex(value["re"], value["im"])
    return {k: decode(v) for k, v in value.items()}
  if isinstance(value, list):
    return [decode(v) for v in value]
  return value


def to_document(report):
  return {
    "command": report.command,
    "status": report.status,
    "inputs": encode(report.inputs),
    "outputs": encode(report.outputs),
    "citations": [str(c) for c in report.citations],
  }


def _cell(value):
  value = encode(value)
  if isinstance(value, str):
    return value
  return json.dumps(value, ensure_ascii=False)


def _plain(report):
  lines = [f"command: {report.command}", f"status: {report.status}"]
  for title, mapping in (("inputs", report.inputs), ("outputs", report.outputs)):
    lines.append(f"{title}:")
    if not mapping:
      lines.append("  (none)")
    width = max((len(str(k)) for k in mapping), default=0)
    for key, value in mapping.items():
      lines.append(f"  {str(key).ljust(width)}  {_cell(value)}")
  if report.citations:
    lines.append("citations:")
    for c in report.citations:
      lines.append(f"  - {c}")
  return "\n".join(lines) + "\n"


def _csv(report):
  buf = io.StringIO()
  writer = csv.writer(buf, lineterminator="\n")
  writer.writerow(["section", "key", "value"])
  writer.writerow(["command", "", report.command])
  writer.writerow(["status", "", report.status])
  for title, mapping in (("inputs", report.inputs), ("outputs", report.outputs)):
    for key, value in mapping.items():
      writer.writerow([title, key, _cell(value)])
  for i, c in enumerate(report.citations):
    writer.writerow(["citations", i, c])
  return buf.getvalue()


def emit(report, format="json"):
  if format == "json":
    text = json.dumps(to_document(report), indent=2, ensure_ascii=False) + "\n"
  elif format == "plain":
    text = _plain(report)
  elif format == "csv":
    text = _csv(report)
  else:
    raise InvalidInputError(f"unknown report format {format!r}")
  return text.encode("utf-8")


def parse(data, format="json"):
  if format != "json":
    raise InvalidInputError(f"only the json format can be parsed, got {format!r}")
  if isinstance(data, bytes):
    data = data.decode("utf-8")
  try:
    doc = json.loads(data)
  except json.JSONDecodeError as e:
    raise InvalidInputError(f"report is not valid JSON: {e}")
  return Report(command=doc["command"],
                inputs=decode(doc.get("inputs", {})),
                outputs=decode(doc.get("outputs", {})),
                citations=list(doc.get("citations", [])),
                status=doc.get("status", STATUS_OK))
