"""Tests for the measurement model: values, validation, classification, rescaling."""

from __future__ import annotations

import json
import random

import pytest
from pydantic import ValidationError

from reprometer.errors import DatasetError, ErrorCode, MeasurementError
from reprometer.measurement import (
    Classification,
    ConditionGroup,
    ConditionStatus,
    ConditionValue,
    PartialDate,
    QuantityValue,
    ValueState,
    ViolationCode,
    bundled_schema,
    bundled_schema_names,
    classify,
    condition_diff,
    load_schema,
    parse_schema,
    rescale_to_zero,
    rescaled_unit,
    validate_set,
)
from reprometer.stats import precision_report

pytestmark = pytest.mark.unit

TORC_ROWS = [
    {"O:treatments": "0", "N:scales": "?", "P:standard_weight": "?"},
    {"O:treatments": "0?", "N:scales": "?", "P:standard_weight": "?"},
    {"O:treatments": "1", "N:scales": "?", "P:standard_weight": "10g"},
    {"O:treatments": "1", "N:scales": "SWS pocket scales", "P:standard_weight": "none"},
    {"O:treatments": "1", "N:scales": "SWS pocket scales", "P:standard_weight": "none"},
    {"O:treatments": "1", "N:scales": "CBD bench counting scales", "P:standard_weight": "none"},
    {"O:treatments": "1", "N:scales": "CBD bench counting scales", "P:standard_weight": "none"},
]
TORC = [92, 92.0, 87.2, 87.47, 87.37, 88.1, 88.1]
KEYS = ["O:a", "N:b", "P:c"]


def _random_rows(rng: random.Random, n: int) -> list[dict[str, str]]:
    options = {"O:a": ["x", "X ", "y"], "N:b": ["p", "q", "?"], "P:c": ["1", "1?"]}
    return [{key: rng.choice(values) for key, values in options.items()} for _ in range(n)]


# =============================================================================
# Values
# =============================================================================


class TestConditionValue:
    @pytest.mark.parametrize("cell", ["?", "", "  ", None])
    def test_unknown(self, cell):
        value = ConditionValue.parse(cell)
        assert value.state == ValueState.UNKNOWN
        assert not value.comparable
        assert value.display() == "?"

    def test_partially_known(self):
        value = ConditionValue.parse("JF?")
        assert value.state == ValueState.PARTIALLY_KNOWN
        assert value.text == "JF"
        assert value.normalized() is None
        assert value.display() == "JF?"

    def test_known_normalization(self):
        a = ConditionValue.parse(" SWS Pocket Scales ")
        b = ConditionValue.parse("sws pocket scales")
        assert a.normalized() == b.normalized()
        assert a.display() == "SWS Pocket Scales"

    def test_text_must_match_state(self):
        with pytest.raises(ValidationError):
            ConditionValue(state=ValueState.UNKNOWN, text="x")
        with pytest.raises(ValidationError):
            ConditionValue(state=ValueState.KNOWN, text="  ")


class TestQuantityAndDate:
    def test_quantity_rejects_nan_and_empty_unit(self):
        with pytest.raises(ValidationError):
            QuantityValue(magnitude=float("nan"), unit="g")
        with pytest.raises(ValidationError):
            QuantityValue(magnitude=1.0, unit=" ")

    @pytest.mark.parametrize(
        ("cell", "expected"), [("1991", "1991"), ("2021-03-09", "2021-03-09")]
    )
    def test_date_round_trip(self, cell, expected):
        assert str(PartialDate.parse(cell)) == expected

    @pytest.mark.parametrize("cell", ["?", "", None])
    def test_unknown_date(self, cell):
        assert PartialDate.parse(cell) is None

    @pytest.mark.parametrize("cell", ["91", "2021-3-9", "2021-13-01", "March 2021"])
    def test_bad_date(self, cell):
        with pytest.raises(ValueError):
            PartialDate.parse(cell)


# =============================================================================
# Schemas
# =============================================================================


class TestSchemas:
    def test_bundled_names(self):
        assert bundled_schema_names() == [
            "human-eval",
            "human-eval-starter",
            "metric-starter",
            "museum",
            "wf1",
        ]

    def test_starter_checklists(self):
        metric = bundled_schema("metric-starter")
        groups = [c.group for c in metric.conditions]
        assert groups.count(ConditionGroup.OBJECT) == 6
        assert groups.count(ConditionGroup.METHOD) == 5
        assert groups.count(ConditionGroup.PROCEDURE) == 3

        human = bundled_schema("human-eval-starter")
        groups = [c.group for c in human.conditions]
        assert ConditionGroup.OBJECT not in groups
        assert groups.count(ConditionGroup.METHOD) == 5
        assert groups.count(ConditionGroup.PROCEDURE) == 6

    def test_find_by_name_or_key(self):
        schema = bundled_schema("museum")
        assert schema.find("scales").group == ConditionGroup.METHOD
        assert schema.find("N:scales").name == "scales"
        assert schema.find("O:scales") is None

    def test_unknown_bundled_schema(self):
        with pytest.raises(DatasetError) as exc:
            bundled_schema("nope")
        assert exc.value.code == ErrorCode.UNKNOWN_EXAMPLE

    def test_duplicate_names_rejected(self):
        doc = {
            "name": "dup",
            "conditions": [{"name": "a", "group": "O"}, {"name": "a", "group": "P"}],
        }
        with pytest.raises(DatasetError) as exc:
            parse_schema(json.dumps(doc))
        assert exc.value.code == ErrorCode.BAD_SCHEMA

    def test_load_schema_file(self, tmp_path):
        path = tmp_path / "s.schema.json"
        path.write_text(json.dumps({"name": "s", "version": "2", "conditions": []}))
        schema = load_schema(path)
        assert (schema.name, schema.version) == ("s", "2")

    def test_load_missing_schema(self, tmp_path):
        with pytest.raises(DatasetError) as exc:
            load_schema(tmp_path / "missing.json")
        assert exc.value.code == ErrorCode.UNREADABLE


# =============================================================================
# Validation
# =============================================================================


class TestValidateSet:
    def test_torc_is_valid(self, make_set):
        assert validate_set(make_set(TORC, TORC_ROWS)) == []

    def test_single_measurement(self, make_set):
        violations = validate_set(make_set([1.0]))
        assert [v.code for v in violations] == [ViolationCode.TOO_FEW_MEASUREMENTS]

    def test_empty_set(self, make_set):
        violations = validate_set(make_set([]))
        assert [v.code for v in violations] == [ViolationCode.TOO_FEW_MEASUREMENTS]

    def test_mixed_object_measurand_unit(self, make_set):
        base = make_set([1.0, 2.0])
        odd = make_set([3.0], object_id="other", measurand="length", unit="mm")
        mixed = base.subset([*base.measurements, odd.measurements[0]])
        codes = {v.code for v in validate_set(mixed)}
        assert codes == {
            ViolationCode.MIXED_OBJECT,
            ViolationCode.MIXED_MEASURAND,
            ViolationCode.MIXED_UNIT,
        }

    def test_unknown_condition_and_group_mismatch(self, make_set, make_schema):
        mset = make_set([1.0, 2.0], [{"O:a": "x", "N:b": "y"}, {"O:a": "x", "N:b": "y"}])
        narrowed = mset.model_copy(update={"condition_schema": make_schema(["P:a"])})
        violations = validate_set(narrowed)
        assert {v.code for v in violations} == {
            ViolationCode.GROUP_MISMATCH,
            ViolationCode.UNKNOWN_CONDITION,
        }
        assert all(v.row in (1, 2) for v in violations)
        assert str(violations[0]).startswith("row 1: ")


# =============================================================================
# Condition comparison and classification
# =============================================================================


class TestClassification:
    def test_torc_is_indeterminate(self, make_set):
        mset = make_set(TORC, TORC_ROWS)
        assert condition_diff(mset) == {
            "O:treatments": ConditionStatus.INDETERMINATE,
            "N:scales": ConditionStatus.INDETERMINATE,
            "P:standard_weight": ConditionStatus.INDETERMINATE,
        }
        assert classify(mset) == Classification.INDETERMINATE

    def test_four_2021_rows_are_reproducibility(self, make_set):
        mset = make_set(TORC[3:], TORC_ROWS[3:])
        status = condition_diff(mset)
        assert status["N:scales"] == ConditionStatus.DIFFERS
        assert status["O:treatments"] == ConditionStatus.ALL_SAME
        assert classify(mset) == Classification.REPRODUCIBILITY

    def test_identical_pair_is_repeatability(self, make_set):
        mset = make_set(TORC[5:], TORC_ROWS[5:])
        assert classify(mset) == Classification.REPEATABILITY

    def test_differs_wins_over_unknown(self, make_set):
        mset = make_set([1.0, 2.0], [{"O:a": "x", "P:b": "?"}, {"O:a": "y", "P:b": "?"}])
        assert classify(mset) == Classification.REPRODUCIBILITY

    def test_two_unknowns_are_not_equal(self, make_set):
        mset = make_set([1.0, 2.0], [{"O:a": "?"}, {"O:a": "?"}])
        assert classify(mset) == Classification.INDETERMINATE

    def test_missing_condition_counts_as_unknown(self, make_set):
        mset = make_set([1.0, 2.0], [{"O:a": "x"}, {}], keys=["O:a"])
        assert condition_diff(mset)["O:a"] == ConditionStatus.INDETERMINATE

    def test_comparison_ignores_case_and_padding(self, make_set):
        mset = make_set([1.0, 2.0], [{"N:s": "CBD Scales"}, {"N:s": " cbd scales "}])
        assert classify(mset) == Classification.REPEATABILITY

    def test_no_conditions_is_repeatability(self, make_set):
        assert classify(make_set([1.0, 2.0])) == Classification.REPEATABILITY

    def test_order_does_not_matter(self, make_set):
        forward = make_set(TORC[2:], TORC_ROWS[2:])
        backward = make_set(TORC[2:][::-1], TORC_ROWS[2:][::-1])
        assert condition_diff(forward) == condition_diff(backward)

    def test_idempotent(self, make_set):
        mset = make_set(TORC, TORC_ROWS)
        assert condition_diff(mset) == condition_diff(mset)
        assert condition_diff(mset) == condition_diff(mset.subset(list(mset.measurements)))

@pytest.mark.property
class TestConditionDiffProperties:
    def test_permutation_invariant(self, make_set):
        rng = random.Random(8)
        for _ in range(200):
            n = rng.randint(1, 8)
            rows = _random_rows(rng, n)
            mset = make_set([1.0] * n, rows, keys=KEYS)
            shuffled = list(mset.measurements)
            rng.shuffle(shuffled)
            assert condition_diff(mset.subset(shuffled)) == condition_diff(mset)

    def test_repeating_a_member_keeps_all_same(self, make_set):
        rng = random.Random(21)
        for _ in range(200):
            n = rng.randint(1, 8)
            rows = _random_rows(rng, n)
            mset = make_set([1.0] * n, rows, keys=KEYS)
            copy = rng.choice(mset.measurements)
            grown = mset.subset([*mset.measurements, copy])
            before, after = condition_diff(mset), condition_diff(grown)
            for key, status in before.items():
                if status == ConditionStatus.ALL_SAME:
                    assert after[key] == ConditionStatus.ALL_SAME


# =============================================================================
# Rescaling
# =============================================================================


class TestRescale:
    def test_shifts_values_and_relabels_unit(self, make_set):
        mset = make_set([6.2978, 5.6402], unit="rating-1..7")
        rescaled = rescale_to_zero(mset, 1, 7)
        assert rescaled.values == pytest.approx((5.2978, 4.6402))
        assert rescaled.unit == "rating-0..6"
        assert mset.values == (6.2978, 5.6402)

    def test_generic_unit_gets_range_suffix(self):
        assert rescaled_unit("points", 1, 5) == "points (0..4)"

    def test_longer_number_is_not_a_scale_suffix(self):
        assert rescaled_unit("rating-11..7", 1, 7) == "rating-11..7 (0..6)"

    def test_out_of_scale(self, make_set):
        with pytest.raises(MeasurementError) as exc:
            rescale_to_zero(make_set([0.5, 3.0]), 1, 7)
        assert exc.value.code == ErrorCode.OUT_OF_SCALE
        assert "row 1" in exc.value.message

    @pytest.mark.parametrize(("lo", "hi"), [(7, 1), (3, 3)])
    def test_bad_scale(self, make_set, lo, hi):
        with pytest.raises(MeasurementError) as exc:
            rescale_to_zero(make_set([3.0, 4.0]), lo, hi)
        assert exc.value.code == ErrorCode.BAD_SCALE

    def test_dispersion_unchanged_exactly(self, make_set):
        mset = make_set([6.25, 5.5, 3.75, 7.0], unit="rating-1..7")
        before = precision_report(mset.sample())
        after = precision_report(rescale_to_zero(mset, 1, 7).sample())
        assert after.sample_stddev_s == before.sample_stddev_s
        assert after.unbiased_stddev_sstar == before.unbiased_stddev_sstar
        assert after.ci_high - after.ci_low == before.ci_high - before.ci_low
        assert after.mean == before.mean - 1
        assert after.cv_star_percent > before.cv_star_percent

    def test_dispersion_unchanged_for_decimal_ratings(self, make_set):
        mset = make_set([6.2978, 5.6402, 4.9], unit="rating-1..7")
        before = precision_report(mset.sample())
        after = precision_report(rescale_to_zero(mset, 1, 7).sample())
        assert after.unbiased_stddev_sstar == pytest.approx(before.unbiased_stddev_sstar, rel=1e-12)
        assert after.ci_high - after.ci_low == pytest.approx(
            before.ci_high - before.ci_low, rel=1e-12
        )
