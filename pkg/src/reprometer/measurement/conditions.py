"""Validation, condition comparison, classification and rescaling of measurement sets."""

from __future__ import annotations

import logging
import re
from enum import StrEnum

from reprometer.errors import ErrorCode, MeasurementError

from .model import MeasurementSet, Violation, ViolationCode

logger = logging.getLogger(__name__)

# a scale suffix must not continue a longer number ("11..7" is not "1..7")
_SCALE_PREFIX_RE = re.compile(r"[\d.]$")


class ConditionStatus(StrEnum):
    ALL_SAME = "AllSame"
    DIFFERS = "Differs"
    INDETERMINATE = "Indeterminate"


class Classification(StrEnum):
    REPEATABILITY = "RepeatabilityConditions"
    REPRODUCIBILITY = "ReproducibilityConditions"
    INDETERMINATE = "IndeterminateConditions"


def validate_set(mset: MeasurementSet) -> list[Violation]:
    """Check object/measurand/unit agreement and schema conformance.

    Violations are returned, never raised; an empty list means the set can
    be assessed.
    """
    violations: list[Violation] = []
    if mset.n < 2:
        violations.append(
            Violation(
                code=ViolationCode.TOO_FEW_MEASUREMENTS,
                message=f"assessment needs at least 2 measurements, got {mset.n}",
            )
        )
    if not mset.measurements:
        return violations

    first = mset.measurements[0]
    schema = mset.condition_schema
    for index, m in enumerate(mset.measurements, start=1):
        row = m.row if m.row is not None else index
        if m.object_id != first.object_id:
            violations.append(
                Violation(
                    code=ViolationCode.MIXED_OBJECT,
                    message=f"object {m.object_id!r} differs from {first.object_id!r}",
                    row=row,
                )
            )
        if m.measurand != first.measurand:
            violations.append(
                Violation(
                    code=ViolationCode.MIXED_MEASURAND,
                    message=f"measurand {m.measurand!r} differs from {first.measurand!r}",
                    row=row,
                )
            )
        if m.value.unit != first.value.unit:
            violations.append(
                Violation(
                    code=ViolationCode.MIXED_UNIT,
                    message=f"unit {m.value.unit!r} differs from {first.value.unit!r}",
                    row=row,
                )
            )
        for condition in m.conditions.conditions:
            spec = schema.find(condition.name)
            if spec is None:
                violations.append(
                    Violation(
                        code=ViolationCode.UNKNOWN_CONDITION,
                        message=(
                            f"condition {condition.group}:{condition.name} is not in "
                            f"schema {schema.name!r}"
                        ),
                        row=row,
                    )
                )
            elif spec.group != condition.group:
                violations.append(
                    Violation(
                        code=ViolationCode.GROUP_MISMATCH,
                        message=(
                            f"condition {condition.name!r} belongs to group {spec.group}, "
                            f"not {condition.group}"
                        ),
                        row=row,
                    )
                )
    return violations


def condition_diff(mset: MeasurementSet) -> dict[str, ConditionStatus]:
    """Status of every schema condition across the set, keyed ``G:name``.

    Three-valued: any unknown or partially known value makes the condition
    Indeterminate; an unknown never equals anything, not even another unknown.
    """
    status: dict[str, ConditionStatus] = {}
    for spec in mset.condition_schema.conditions:
        keys = [
            m.conditions.value_of(spec.name, spec.group).normalized() for m in mset.measurements
        ]
        if any(key is None for key in keys):
            status[spec.key] = ConditionStatus.INDETERMINATE
        elif len(set(keys)) <= 1:
            status[spec.key] = ConditionStatus.ALL_SAME
        else:
            status[spec.key] = ConditionStatus.DIFFERS
    return status


def classify(mset: MeasurementSet) -> Classification:
    """Repeatability iff every condition is AllSame, reproducibility iff any Differs."""
    statuses = condition_diff(mset).values()
    if all(s == ConditionStatus.ALL_SAME for s in statuses):
        return Classification.REPEATABILITY
    if any(s == ConditionStatus.DIFFERS for s in statuses):
        return Classification.REPRODUCIBILITY
    return Classification.INDETERMINATE


def _fmt_bound(value: float) -> str:
    return f"{value:g}"


def rescaled_unit(unit: str, scale_min: float, scale_max: float) -> str:
    """Relabel a unit for a scale shifted to start at 0 ("rating-1..7" -> "rating-0..6")."""
    span = _fmt_bound(scale_max - scale_min)
    suffix = f"{_fmt_bound(scale_min)}..{_fmt_bound(scale_max)}"
    head = unit[: len(unit) - len(suffix)]
    if unit.endswith(suffix) and not _SCALE_PREFIX_RE.search(head):
        return f"{head}0..{span}"
    return f"{unit} (0..{span})"


def rescale_to_zero(mset: MeasurementSet, scale_min: float, scale_max: float) -> MeasurementSet:
    """Shift every value by -scale_min so the rating scale starts at 0.

    Returns a new set; the input is not modified.

    Raises:
        MeasurementError: BAD_SCALE if scale_min >= scale_max, OUT_OF_SCALE if
            any value lies outside the declared scale.
    """
    if not scale_min < scale_max:
        raise MeasurementError(
            ErrorCode.BAD_SCALE, f"scale minimum {scale_min} must be below maximum {scale_max}"
        )
    shifted = []
    for index, m in enumerate(mset.measurements, start=1):
        v = m.value.magnitude
        if not scale_min <= v <= scale_max:
            row = m.row if m.row is not None else index
            raise MeasurementError(
                ErrorCode.OUT_OF_SCALE,
                f"row {row}: value {v:g} outside scale {scale_min:g}..{scale_max:g}",
            )
        shifted.append(
            m.with_value(v - scale_min, rescaled_unit(m.value.unit, scale_min, scale_max))
        )
    logger.debug("rescaled %d values by %g", len(shifted), -scale_min)
    return mset.subset(shifted)
