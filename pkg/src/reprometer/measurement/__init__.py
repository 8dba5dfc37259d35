"""Measurements, conditions of measurement and repeatability/reproducibility classification."""

from .conditions import (
    Classification,
    ConditionStatus,
    classify,
    condition_diff,
    rescale_to_zero,
    rescaled_unit,
    validate_set,
)
from .model import (
    Condition,
    ConditionSet,
    ConditionValue,
    Measurement,
    MeasurementSet,
    PartialDate,
    QuantityValue,
    ValueState,
    Violation,
    ViolationCode,
)
from .schema import (
    ConditionGroup,
    ConditionSchema,
    ConditionSpec,
    bundled_schema,
    bundled_schema_names,
    bundled_schema_text,
    load_schema,
    parse_schema,
)

__all__ = [
    "Classification",
    "Condition",
    "ConditionGroup",
    "ConditionSchema",
    "ConditionSet",
    "ConditionSpec",
    "ConditionStatus",
    "ConditionValue",
    "Measurement",
    "MeasurementSet",
    "PartialDate",
    "QuantityValue",
    "ValueState",
    "Violation",
    "ViolationCode",
    "bundled_schema",
    "bundled_schema_names",
    "bundled_schema_text",
    "classify",
    "condition_diff",
    "load_schema",
    "parse_schema",
    "rescale_to_zero",
    "rescaled_unit",
    "validate_set",
]
