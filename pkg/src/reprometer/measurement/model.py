"""Measurement data model.

A measurement maps (measurand, object, time, conditions) to a measured
quantity value. Conditions are name/value pairs grouped into object,
measurement-method and measurement-procedure conditions. Condition values may
be unknown ("?") or only partially known ("JF?"); both are incomparable.
"""

from __future__ import annotations

import math
import re
from enum import StrEnum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from reprometer.stats import Sample

from .schema import ConditionGroup, ConditionSchema

UNKNOWN_MARK = "?"

_DATE_RE = re.compile(r"^(\d{4})(?:-(\d{2})-(\d{2}))?$")


class ValueState(StrEnum):
    KNOWN = "known"
    UNKNOWN = "unknown"
    PARTIALLY_KNOWN = "partially_known"


class ConditionValue(BaseModel):
    """The value of one condition, possibly unknown or in doubt."""

    model_config = ConfigDict(frozen=True)

    state: ValueState
    text: Optional[str] = None

    @model_validator(mode="after")
    def _text_matches_state(self) -> ConditionValue:
        if self.state == ValueState.UNKNOWN:
            if self.text is not None:
                raise ValueError("unknown condition values carry no text")
        elif not (self.text and self.text.strip()):
            raise ValueError(f"{self.state} condition values need non-empty text")
        return self

    @classmethod
    def known(cls, text: str) -> ConditionValue:
        return cls(state=ValueState.KNOWN, text=text.strip())

    @classmethod
    def unknown(cls) -> ConditionValue:
        return cls(state=ValueState.UNKNOWN)

    @classmethod
    def partially_known(cls, text: str) -> ConditionValue:
        return cls(state=ValueState.PARTIALLY_KNOWN, text=text.strip())

    @classmethod
    def parse(cls, raw: Optional[str]) -> ConditionValue:
        """Parse a table cell: "?" or empty is unknown, "text?" is in doubt."""
        cell = (raw or "").strip()
        if cell in ("", UNKNOWN_MARK):
            return cls.unknown()
        if cell.endswith(UNKNOWN_MARK):
            return cls.partially_known(cell[:-1])
        return cls.known(cell)

    @property
    def comparable(self) -> bool:
        return self.state == ValueState.KNOWN

    def normalized(self) -> Optional[str]:
        """Comparison key; None for incomparable values."""
        if not self.comparable or self.text is None:
            return None
        return self.text.strip().casefold()

    def display(self) -> str:
        if self.state == ValueState.UNKNOWN:
            return UNKNOWN_MARK
        if self.state == ValueState.PARTIALLY_KNOWN:
            return f"{self.text}{UNKNOWN_MARK}"
        return self.text or ""


class Condition(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    group: ConditionGroup
    value: ConditionValue


class ConditionSet(BaseModel):
    """Conditions of one measurement; (name, group) is unique."""

    model_config = ConfigDict(frozen=True)

    conditions: list[Condition] = Field(default_factory=list)

    @model_validator(mode="after")
    def _unique_keys(self) -> ConditionSet:
        seen: set[tuple[str, ConditionGroup]] = set()
        for condition in self.conditions:
            key = (condition.name, condition.group)
            if key in seen:
                raise ValueError(f"duplicate condition {condition.group}:{condition.name}")
            seen.add(key)
        return self

    def get(self, name: str, group: ConditionGroup | None = None) -> Optional[ConditionValue]:
        for condition in self.conditions:
            if condition.name == name and (group is None or condition.group == group):
                return condition.value
        return None

    def value_of(self, name: str, group: ConditionGroup | None = None) -> ConditionValue:
        """Value of a condition; conditions that were not recorded are unknown."""
        return self.get(name, group) or ConditionValue.unknown()


class QuantityValue(BaseModel):
    """A magnitude together with its unit."""

    model_config = ConfigDict(frozen=True)

    magnitude: float
    unit: str

    @field_validator("magnitude")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("magnitude must be finite")
        return value

    @field_validator("unit")
    @classmethod
    def _non_empty(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("unit must be non-empty")
        return value.strip()


class PartialDate(BaseModel):
    """A calendar date known to year or to day precision."""

    model_config = ConfigDict(frozen=True)

    year: int
    month: Optional[int] = None
    day: Optional[int] = None

    @classmethod
    def parse(cls, raw: Optional[str]) -> Optional[PartialDate]:
        """Parse YYYY or YYYY-MM-DD; "?" or empty means unknown (None).

        Raises:
            ValueError: For any other format.
        """
        cell = (raw or "").strip()
        if cell in ("", UNKNOWN_MARK):
            return None
        match = _DATE_RE.match(cell)
        if not match:
            raise ValueError(f"date must be YYYY, YYYY-MM-DD or '?', got {cell!r}")
        year, month, day = match.groups()
        if month is None:
            return cls(year=int(year))
        if not (1 <= int(month) <= 12 and 1 <= int(day) <= 31):
            raise ValueError(f"invalid date {cell!r}")
        return cls(year=int(year), month=int(month), day=int(day))

    def __str__(self) -> str:
        if self.month is None:
            return f"{self.year:04d}"
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}"


class Measurement(BaseModel):
    """One measured quantity value with its identifying metadata."""

    model_config = ConfigDict(frozen=True)

    object_id: str
    measurand: str
    value: QuantityValue
    date: Optional[PartialDate] = None
    team: ConditionValue = Field(default_factory=ConditionValue.unknown)
    conditions: ConditionSet = Field(default_factory=ConditionSet)
    source: str = ""
    row: Optional[int] = None

    def with_value(self, magnitude: float, unit: str) -> Measurement:
        return self.model_copy(update={"value": QuantityValue(magnitude=magnitude, unit=unit)})


class MeasurementSet(BaseModel):
    """Measurements of one object and measurand; the unit of assessment."""

    model_config = ConfigDict(frozen=True)

    measurements: list[Measurement]
    condition_schema: ConditionSchema

    @property
    def n(self) -> int:
        return len(self.measurements)

    @property
    def object_id(self) -> str:
        return self.measurements[0].object_id if self.measurements else ""

    @property
    def measurand(self) -> str:
        return self.measurements[0].measurand if self.measurements else ""

    @property
    def unit(self) -> str:
        return self.measurements[0].value.unit if self.measurements else ""

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(m.value.magnitude for m in self.measurements)

    def sample(self) -> Sample:
        return Sample(self.values)

    def subset(self, measurements: list[Measurement]) -> MeasurementSet:
        return MeasurementSet(measurements=measurements, condition_schema=self.condition_schema)


class ViolationCode(StrEnum):
    MIXED_OBJECT = "MIXED_OBJECT"
    MIXED_MEASURAND = "MIXED_MEASURAND"
    MIXED_UNIT = "MIXED_UNIT"
    UNKNOWN_CONDITION = "UNKNOWN_CONDITION"
    GROUP_MISMATCH = "GROUP_MISMATCH"
    TOO_FEW_MEASUREMENTS = "TOO_FEW_MEASUREMENTS"


class Violation(BaseModel):
    """A precondition of assessment that a measurement set does not meet."""

    model_config = ConfigDict(frozen=True)

    code: ViolationCode
    message: str
    row: Optional[int] = None

    def __str__(self) -> str:
        where = f"row {self.row}: " if self.row is not None else ""
        return f"{where}{self.code}: {self.message}"
