"""
Unit test fixtures: builders for measurement sets.
"""

from collections.abc import Callable

import pytest

from reprometer.measurement import (
    Condition,
    ConditionGroup,
    ConditionSchema,
    ConditionSet,
    ConditionSpec,
    ConditionValue,
    Measurement,
    MeasurementSet,
    QuantityValue,
)


def schema_for(keys: list[str], name: str = "test") -> ConditionSchema:
    """Schema from ``G:name`` keys, in order."""
    specs = []
    for key in keys:
        group, cond = key.split(":", 1)
        specs.append(ConditionSpec(name=cond, group=ConditionGroup(group)))
    return ConditionSchema(name=name, conditions=specs)


def build_set(
    values: list[float],
    conditions: list[dict[str, str]] | None = None,
    *,
    keys: list[str] | None = None,
    object_id: str = "obj",
    measurand: str = "mass",
    unit: str = "g",
    teams: list[str] | None = None,
    sources: list[str] | None = None,
) -> MeasurementSet:
    """Measurement set from values and per-row ``{"G:name": cell}`` conditions.

    Cells are parsed like CSV cells, so "?" is unknown and "x?" partially known.
    """
    conditions = conditions or [{} for _ in values]
    if keys is None:
        keys = list(dict.fromkeys(k for row in conditions for k in row))
    measurements = []
    for index, (value, row) in enumerate(zip(values, conditions, strict=True), start=1):
        parsed = []
        for key, cell in row.items():
            group, name = key.split(":", 1)
            parsed.append(
                Condition(name=name, group=ConditionGroup(group), value=ConditionValue.parse(cell))
            )
        measurements.append(
            Measurement(
                object_id=object_id,
                measurand=measurand,
                value=QuantityValue(magnitude=value, unit=unit),
                team=ConditionValue.parse(teams[index - 1] if teams else "?"),
                conditions=ConditionSet(conditions=parsed),
                source=sources[index - 1] if sources else "",
                row=index,
            )
        )
    return MeasurementSet(measurements=measurements, condition_schema=schema_for(keys))


@pytest.fixture
def make_set() -> Callable[..., MeasurementSet]:
    """Fixture returning the ``build_set`` builder."""
    return build_set


@pytest.fixture
def make_schema() -> Callable[..., ConditionSchema]:
    """Fixture returning the ``schema_for`` builder."""
    return schema_for
