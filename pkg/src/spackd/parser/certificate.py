"""
JSON schema certificates and CSV explicit assignments.

Certificate format:

    {"k": 3, "t": 4, "sequence": "1^2,2^inf",
     "patterns": {"A": [1, 2], "B": [3, 4, 2, 1]},
     "columns": ["A", "B", "B", "A"], "shifts": [0, 2, 0, 1]}

Assignments are "n,color" lines with an optional "n,color" header.
"""

import csv
import io
import json
from pathlib import Path

from ..engine.patterns import ColoringSchema, Pattern
from ..graph.distance_graph import DistanceGraphSpec
from ..utils.errors import CertificateError
from .sequence import PackingSequence, parse_sequence

REQUIRED_KEYS = ("k", "t", "sequence", "patterns", "columns", "shifts")


def _require_int(value, what: str) -> int:
    # bool is an int subclass
    if isinstance(value, bool) or not isinstance(value, int):
        raise CertificateError(f"{what} must be an integer, got {value!r}")
    return value


def schema_to_certificate(schema: ColoringSchema, seq: PackingSequence) -> dict:
    """Convert a schema and its sequence to the certificate dict."""
    used = sorted(set(schema.columns))
    return {
        "k": schema.k,
        "t": schema.t,
        "sequence": seq.format(),
        "patterns": {name: list(schema.patterns[name].colors) for name in used},
        "columns": list(schema.columns),
        "shifts": list(schema.shifts),
    }


def certificate_to_schema(data: dict) -> tuple[ColoringSchema, PackingSequence]:
    """
    Build a schema from a certificate dict.

    Raises:
        CertificateError: Missing keys, wrong types, or an inconsistent schema
    """
    if not isinstance(data, dict):
        raise CertificateError("certificate must be a JSON object")
    missing = [key for key in REQUIRED_KEYS if key not in data]
    if missing:
        raise CertificateError(f"certificate missing keys: {missing}")
    patterns = data["patterns"]
    if not isinstance(patterns, dict) or not all(isinstance(p, list) for p in patterns.values()):
        raise CertificateError("'patterns' must map names to color lists")
    if not isinstance(data["columns"], list) or not isinstance(data["shifts"], list):
        raise CertificateError("'columns' and 'shifts' must be lists")
    if not isinstance(data["sequence"], str):
        raise CertificateError("'sequence' must be a string")
    k, t = _require_int(data["k"], "k"), _require_int(data["t"], "t")
    colors = {
        name: tuple(_require_int(c, f"color in pattern {name!r}") for c in word)
        for name, word in patterns.items()
    }
    shifts = tuple(_require_int(s, "shift") for s in data["shifts"])
    try:
        schema = ColoringSchema(
            spec=DistanceGraphSpec(k, t),
            patterns={name: Pattern(word) for name, word in colors.items()},
            columns=tuple(str(name) for name in data["columns"]),
            shifts=shifts,
        )
    except CertificateError:
        raise
    except (TypeError, ValueError, OverflowError) as e:
        raise CertificateError(f"invalid certificate: {e}") from e
    return schema, parse_sequence(data["sequence"])


def load_certificate(path: Path) -> tuple[ColoringSchema, PackingSequence]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except UnicodeDecodeError as e:
        raise CertificateError(f"{path}: not UTF-8 text ({e})") from e
    except ValueError as e:
        raise CertificateError(f"{path}: malformed JSON ({e})") from e
    return certificate_to_schema(data)


def dump_certificate(schema: ColoringSchema, seq: PackingSequence) -> str:
    return json.dumps(schema_to_certificate(schema, seq), indent=2)


def parse_assignment_csv(text: str) -> dict[int, int]:
    """Parse "n,color" lines into an assignment."""
    assignment: dict[int, int] = {}
    for line_no, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if line_no == 1 and row[0].strip().lower() == "n":
            continue
        if len(row) != 2:
            raise CertificateError(f"line {line_no}: expected 'n,color', got {row}")
        try:
            n, color = int(row[0]), int(row[1])
        except ValueError as e:
            raise CertificateError(f"line {line_no}: {e}") from e
        if n in assignment:
            raise CertificateError(f"line {line_no}: vertex {n} assigned twice")
        assignment[n] = color
    return assignment


def load_assignment_csv(path: Path) -> dict[int, int]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise CertificateError(f"{path}: not UTF-8 text ({e})") from e
    return parse_assignment_csv(text)


def assignment_to_csv(assignment: dict[int, int]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "color"])
    for n in sorted(assignment):
        writer.writerow([n, assignment[n]])
    return buffer.getvalue()
