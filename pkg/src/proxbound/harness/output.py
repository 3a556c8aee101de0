"""
实验结果的 CSV 与逐行 JSON 读写。

列顺序固定为 CSV_COLUMNS。精确值写成整数或 "p/q" 字符串，
布尔值写成 true / false，*_approx 列写成 12 位有效数字的浮点数，
缺失值在 CSV 中为空、在 JSON 中为 null。
"""

import csv
import io
import json
from collections.abc import Iterable
from fractions import Fraction
from typing import IO, Any, get_args, get_type_hints

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import format_scalar, parse_scalar

from .data_types import APPROX_DIGITS, CSV_COLUMNS, ExperimentRow

_COLUMN_TYPES: dict[str, type] = {
    column: next(arg for arg in (get_args(hint) or (hint,)) if arg is not type(None))
    for column, hint in get_type_hints(ExperimentRow).items()
}


def _to_text(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, float):
        return f"{value:.{APPROX_DIGITS}g}"
    return str(value)


def _from_text(column: str, text: str) -> Any:
    if text == "":
        return None
    kind = _COLUMN_TYPES[column]
    if kind is bool:
        if text not in ("true", "false"):
            raise PreconditionError(f"Column {column}: not a boolean: {text!r}")
        return text == "true"
    if kind is int:
        return int(text)
    if kind is Fraction:
        return parse_scalar(text)
    if kind is float:
        return float(text)
    return text


def _to_json_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_scalar(value)
    return value


def _from_json_value(column: str, value: Any) -> Any:
    if value is None:
        return None
    kind = _COLUMN_TYPES[column]
    if kind is Fraction:
        return parse_scalar(str(value))
    if kind is float:
        return float(value)
    return value


def write_csv(rows: Iterable[ExperimentRow], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_to_text(getattr(row, column)) for column in CSV_COLUMNS])


def read_csv(stream: IO[str]) -> list[ExperimentRow]:
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or tuple(header) != CSV_COLUMNS:
        raise PreconditionError(f"Unexpected CSV header: {header}")
    return [
        ExperimentRow(**{column: _from_text(column, text) for column, text in zip(header, record)})
        for record in reader
        if record
    ]


def write_ndjson(rows: Iterable[ExperimentRow], stream: IO[str]) -> None:
    for row in rows:
        record = {column: _to_json_value(getattr(row, column)) for column in CSV_COLUMNS}
        stream.write(json.dumps(record) + "\n")


def read_ndjson(stream: IO[str]) -> list[ExperimentRow]:
    rows = []
    for line in stream:
        if not line.strip():
            continue
        record = json.loads(line)
        rows.append(
            ExperimentRow(**{column: _from_json_value(column, record.get(column)) for column in CSV_COLUMNS})
        )
    return rows


def render(rows: Iterable[ExperimentRow], output_format: str = "csv") -> str:
    """
    以字符串形式返回整个输出。
    """
    buffer = io.StringIO()
    match output_format:
        case "csv":
            write_csv(rows, buffer)
        case "json":
            write_ndjson(rows, buffer)
        case _:
            raise ValueError(f"Unknown output format: {output_format}")
    return buffer.getvalue()


def read_rows(stream: IO[str]) -> list[ExperimentRow]:
    """
    读取 CSV 或逐行 JSON 输出，按首个非空字符判断格式。
    """
    text = stream.read()
    source = io.StringIO(text)
    if text.lstrip().startswith("{"):
        return read_ndjson(source)
    return read_csv(source)
