"""Partitioning a measurement set by the values of selected conditions."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from reprometer.errors import AssessmentError, ErrorCode
from reprometer.measurement import ConditionValue, Measurement, MeasurementSet


def combination_label(combination: dict[str, str]) -> str:
    if not combination:
        return "all measurements"
    return ", ".join(f"{k} = {v}" for k, v in combination.items())


# provenance fields that may partition a set but never classify it
PROVENANCE_NAMES = ("team", "date")


class ConditionGroupSet(BaseModel):
    """One combination of condition values and the measurements sharing it."""

    model_config = ConfigDict(frozen=True)

    combination: dict[str, str]
    indeterminate: bool
    measurements: MeasurementSet

    def label(self) -> str:
        return combination_label(self.combination)


def _value_for(m: Measurement, name: str, mset: MeasurementSet) -> ConditionValue:
    if name == "team":
        return m.team
    if name == "date":
        return ConditionValue.parse(str(m.date) if m.date else None)
    spec = mset.condition_schema.find(name)
    assert spec is not None
    return m.conditions.value_of(spec.name, spec.group)


def resolve_names(mset: MeasurementSet, names: list[str]) -> list[str]:
    """Canonical names for condition selectors (bare name, ``G:name``, team, date).

    Raises:
        AssessmentError: UNKNOWN_CONDITION for names not in the schema.
    """
    resolved = []
    for name in names:
        if name in PROVENANCE_NAMES:
            resolved.append(name)
            continue
        spec = mset.condition_schema.find(name)
        if spec is None:
            raise AssessmentError(
                ErrorCode.UNKNOWN_CONDITION,
                f"condition {name!r} is not in schema {mset.condition_schema.name!r}",
            )
        resolved.append(spec.name)
    return resolved


def group_by_varied_conditions(mset: MeasurementSet, names: list[str]) -> list[ConditionGroupSet]:
    """Partition a set by the tuple of the named condition values.

    Tuples containing unknown or partially known values form their own
    groups, flagged indeterminate. Groups are returned sorted by their
    combination so the result does not depend on measurement order; every
    measurement lands in exactly one group.
    """
    resolved = resolve_names(mset, names)
    buckets: dict[tuple[str, ...], list[Measurement]] = {}
    flags: dict[tuple[str, ...], bool] = {}
    displays: dict[tuple[str, ...], tuple[str, ...]] = {}
    for m in mset.measurements:
        values = [_value_for(m, name, mset) for name in resolved]
        key = tuple(v.normalized() if v.comparable else v.display().casefold() for v in values)
        buckets.setdefault(key, []).append(m)
        flags[key] = flags.get(key, False) or any(not v.comparable for v in values)
        display = tuple(v.display() for v in values)
        displays[key] = min(displays.get(key, display), display)

    groups = []
    for key in sorted(buckets):
        groups.append(
            ConditionGroupSet(
                combination=dict(zip(resolved, displays[key])),
                indeterminate=flags[key],
                measurements=mset.subset(buckets[key]),
            )
        )
    return groups
