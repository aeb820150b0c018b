"""
Render results as aligned tables, CSV or JSON.

JSON output uses a stable envelope {command, inputs, result, mode}. Rational
values become "num/den" strings in CSV and JSON (and in tables when the exact
flag is set); floats are rounded to the requested significant digits, so
re-rendering parsed output reproduces it byte for byte.
"""

import csv
import io
import json
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from models.output import CSV, JSON, OutputSpec


def rational_string(value: Fraction) -> str:
    """Lowest-terms "num/den" form, denominator always shown"""
    return f"{value.numerator}/{value.denominator}"


def _round_float(value: float, precision: int):
    # JSON has no literal for non-finite numbers
    if not math.isfinite(value):
        return str(value)
    return float(f"{value:.{precision}g}")


def normalize(value: Any, spec: OutputSpec) -> Any:
    """
    Convert a result value to plain JSON-compatible data.

    Dataclass models are expected to be converted with to_dict() first.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        if spec.exact_flag or spec.machine_readable:
            return rational_string(value)
        return _round_float(float(value), spec.precision)
    if isinstance(value, dict):
        return {str(key): normalize(item, spec) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize(item, spec) for item in value]
    # float, numpy and mpmath scalars
    return _round_float(float(value), spec.precision)


def envelope(command: str, inputs: Dict, result: Any, mode: str) -> Dict:
    """The stable top-level JSON structure"""
    return {'command': command, 'inputs': inputs, 'result': result, 'mode': mode}


def render_json(document: Dict, spec: OutputSpec) -> str:
    return json.dumps(normalize(document, spec), indent=2, ensure_ascii=False, allow_nan=False)


def _cell(value: Any, spec: OutputSpec) -> str:
    value = normalize(value, spec)
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{spec.precision}g}"
    if isinstance(value, (list, dict)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def render_csv(rows: Sequence[Dict], columns: Sequence[str], spec: OutputSpec) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column), spec) for column in columns])
    return buffer.getvalue().rstrip("\n")


def render_table(rows: Sequence[Dict], columns: Sequence[str], spec: OutputSpec) -> str:
    frame = pd.DataFrame(
        [[_cell(row.get(column), spec) for column in columns] for row in rows],
        columns=list(columns),
    )
    return frame.to_string(index=False)


def render(
    command: str,
    inputs: Dict,
    rows: List[Dict],
    columns: Sequence[str],
    spec: OutputSpec,
    mode: str,
    result: Optional[Any] = None,
) -> str:
    """
    Render one subcommand's output.

    Args:
        command: Subcommand name
        inputs: Parsed inputs for the JSON envelope
        rows: Result rows for table and CSV output
        columns: Fixed column order
        spec: Output specification
        mode: "exact" or "float"
        result: JSON result; defaults to the single row, or the row list

    Returns:
        Rendered text without a trailing newline
    """
    if spec.format == JSON:
        if result is None:
            result = rows[0] if len(rows) == 1 else rows
        return render_json(envelope(command, inputs, result, mode), spec)
    if spec.format == CSV:
        return render_csv(rows, columns, spec)
    return render_table(rows, columns, spec)
