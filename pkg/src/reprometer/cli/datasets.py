"""CSV ingestion of measurement tables.

One row per measurement. Required columns are ``object_id``, ``measurand``,
``unit``, ``value``, ``date`` and ``team``; ``source`` is optional. Every
other column is a condition named ``O:<name>``, ``N:<name>`` or ``P:<name>``
for object, method and procedure conditions. Lines starting with ``#`` are
comments. Rows are numbered from 1 (first data row).
"""

from __future__ import annotations

import csv
import io
import logging
import math
import re
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, ValidationError

from reprometer.errors import DatasetError, ErrorCode
from reprometer.measurement import (
    Condition,
    ConditionGroup,
    ConditionSchema,
    ConditionSet,
    ConditionSpec,
    ConditionValue,
    Measurement,
    MeasurementSet,
    PartialDate,
    QuantityValue,
    load_schema,
)

logger = logging.getLogger(__name__)

REQUIRED_COLUMNS = ("object_id", "measurand", "unit", "value", "date", "team")
OPTIONAL_COLUMNS = ("source",)
INFERRED_SCHEMA_NAME = "inferred"
INFERRED_SCHEMA_VERSION = "0"

_CONDITION_COLUMN_RE = re.compile(r"^([ONP]):(.+)$")


class DatasetFile(BaseModel):
    """A measurements CSV and, optionally, the schema describing its conditions."""

    model_config = ConfigDict(frozen=True)

    measurements: Path
    schema_path: Optional[Path] = None

    def load(self) -> MeasurementSet:
        schema = load_schema(self.schema_path) if self.schema_path else None
        return load_dataset(self.measurements, schema)


def _condition_columns(header: list[str]) -> list[tuple[str, ConditionGroup, str]]:
    columns = []
    for column in header:
        if column in REQUIRED_COLUMNS or column in OPTIONAL_COLUMNS:
            continue
        match = _CONDITION_COLUMN_RE.match(column)
        if not match or not match.group(2).strip():
            raise DatasetError(
                ErrorCode.BAD_COLUMN,
                f"column {column!r} is neither a required column nor a condition "
                "column named O:<name>, N:<name> or P:<name>",
            )
        columns.append((column, ConditionGroup(match.group(1)), match.group(2).strip()))
    names = [name for _, _, name in columns]
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        raise DatasetError(
            ErrorCode.BAD_COLUMN,
            f"condition name(s) appear in more than one column: {', '.join(duplicates)}",
        )
    return columns


def infer_schema(header: list[str]) -> ConditionSchema:
    """Schema listing the condition columns of a header, in column order."""
    return ConditionSchema(
        name=INFERRED_SCHEMA_NAME,
        version=INFERRED_SCHEMA_VERSION,
        description="Inferred from the CSV header",
        conditions=[
            ConditionSpec(name=name, group=group)
            for _, group, name in _condition_columns(header)
        ],
    )


def _parse_value(cell: str, row: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise DatasetError(ErrorCode.BAD_VALUE, f"value {cell!r} is not a number", row) from None
    if not math.isfinite(value):
        raise DatasetError(ErrorCode.BAD_VALUE, f"value {cell!r} is not finite", row)
    return value


def _parse_row(
    record: dict[str, Optional[str]],
    row: int,
    conditions: list[tuple[str, ConditionGroup, str]],
) -> Measurement:
    if record.get(None):  # type: ignore[call-overload]
        raise DatasetError(ErrorCode.BAD_VALUE, "row has more cells than the header", row)

    def cell(column: str) -> str:
        return (record.get(column) or "").strip()

    try:
        date = PartialDate.parse(cell("date"))
    except ValueError as e:
        raise DatasetError(ErrorCode.BAD_DATE, str(e), row) from None

    try:
        return Measurement(
            object_id=cell("object_id"),
            measurand=cell("measurand"),
            value=QuantityValue(magnitude=_parse_value(cell("value"), row), unit=cell("unit")),
            date=date,
            team=ConditionValue.parse(cell("team")),
            conditions=ConditionSet(
                conditions=[
                    Condition(name=name, group=group, value=ConditionValue.parse(cell(column)))
                    for column, group, name in conditions
                ]
            ),
            source=cell("source"),
            row=row,
        )
    except ValidationError as e:
        raise DatasetError(ErrorCode.BAD_VALUE, e.errors()[0]["msg"], row) from None


def parse_measurements(
    text: str, schema: Optional[ConditionSchema] = None, origin: str = "<string>"
) -> MeasurementSet:
    """Parse CSV text into a measurement set.

    Args:
        text: CSV content.
        schema: Condition schema; inferred from the header when omitted.
        origin: Name used in log messages.

    Raises:
        DatasetError: MISSING_COLUMN, BAD_COLUMN, BAD_VALUE or BAD_DATE.
    """
    lines = [line for line in text.splitlines() if not line.lstrip().startswith("#")]
    reader = csv.DictReader(io.StringIO("\n".join(lines)))
    header = [column.strip() for column in reader.fieldnames or []]
    reader.fieldnames = header

    missing = [column for column in REQUIRED_COLUMNS if column not in header]
    if missing:
        raise DatasetError(
            ErrorCode.MISSING_COLUMN, f"{origin} lacks required column(s): {', '.join(missing)}"
        )
    conditions = _condition_columns(header)

    measurements = [
        _parse_row(record, row, conditions) for row, record in enumerate(reader, start=1)
    ]
    logger.debug("Parsed %d measurements from %s", len(measurements), origin)
    return MeasurementSet(
        measurements=measurements, condition_schema=schema or infer_schema(header)
    )


def load_dataset(path: str | Path, schema: Optional[ConditionSchema] = None) -> MeasurementSet:
    """Read a measurements CSV file.

    Raises:
        DatasetError: UNREADABLE, or any parse error of ``parse_measurements``.
    """
    csv_path = Path(path)
    try:
        text = csv_path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise DatasetError(ErrorCode.UNREADABLE, f"cannot read {csv_path}: {e}") from e
    mset = parse_measurements(text, schema, str(csv_path))
    logger.info("Loaded %d measurements from %s", mset.n, csv_path)
    return mset
