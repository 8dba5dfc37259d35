"""1-phase and 2-phase reproducibility assessment.

1-phase: for existing measurements where no repeatability baseline can be
established. Identify the shared object and measurand, record the
conditions, and compute one reproducibility score R.

2-phase: a repeatability phase yields the baseline R0 from measurements
under identical conditions; a reproducibility phase then scores every
combination of the varied condition values. The effect of varying the
conditions is estimated as CV*(R) - CV*(R0).
"""

from __future__ import annotations

import logging

from reprometer.errors import AssessmentError, ErrorCode, Note, NoteCode, Severity
from reprometer.measurement import (
    Classification,
    ConditionStatus,
    MeasurementSet,
    classify,
    condition_diff,
    validate_set,
)
from reprometer.stats import PrecisionReport, precision_report

from .grouping import (
    ConditionGroupSet,
    combination_label,
    group_by_varied_conditions,
    resolve_names,
)
from .types import (
    AssessmentConfig,
    AssessmentMode,
    AssessmentResult,
    EffectEstimate,
    GroupScore,
    ProvenanceEntry,
)

logger = logging.getLogger(__name__)


def _require_valid(mset: MeasurementSet, label: str) -> None:
    violations = validate_set(mset)
    if violations:
        raise AssessmentError(
            ErrorCode.INVALID_SET,
            f"{label} failed validation with {len(violations)} violation(s)",
            violations,
        )


def _provenance(mset: MeasurementSet) -> list[ProvenanceEntry]:
    return [
        ProvenanceEntry(
            value=m.value.magnitude,
            date=str(m.date) if m.date else None,
            team=m.team.display(),
            source=m.source,
        )
        for m in mset.measurements
    ]


def _indeterminate_caveat(mset: MeasurementSet, status: dict[str, ConditionStatus]) -> Note:
    names = [
        spec.name
        for spec in mset.condition_schema.conditions
        if status[spec.key] == ConditionStatus.INDETERMINATE
    ]
    return Note(
        code=NoteCode.INDETERMINATE_CONDITIONS,
        message=(
            f"Some condition values are unknown or only partially known ({', '.join(names)}), "
            "so it could not be fully determined which conditions of measurement differ."
        ),
        details=names,
    )


def _score_groups(
    groups: list[ConditionGroupSet], config: AssessmentConfig
) -> tuple[list[GroupScore], list[Note]]:
    scores: list[GroupScore] = []
    caveats: list[Note] = []
    for group in groups:
        if group.indeterminate:
            caveats.append(
                Note(
                    code=NoteCode.INDETERMINATE_GROUP,
                    message=f"Group {group.label()} contains unknown condition values.",
                    details=list(group.combination.values()),
                )
            )
        if group.measurements.n < 2:
            caveats.append(
                Note(
                    code=NoteCode.SINGLETON_GROUP,
                    message=(
                        f"Group {group.label()} has a single measurement and was excluded "
                        "from scoring."
                    ),
                    details=list(group.combination.values()),
                )
            )
            continue
        scores.append(
            GroupScore(
                combination=group.combination,
                indeterminate=group.indeterminate,
                classification=classify(group.measurements),
                report=precision_report(group.measurements.sample(), config.ci_level),
            )
        )
    return scores, caveats


def assess_one_phase(mset: MeasurementSet, config: AssessmentConfig) -> AssessmentResult:
    """Assess a set of existing measurements without a repeatability baseline.

    The first R score covers the whole set. If ``varied_condition_names`` is
    set, one further R score follows per combination of those conditions.

    Raises:
        AssessmentError: INVALID_SET if the set fails validation,
            UNKNOWN_CONDITION for an unknown varied condition.
    """
    _require_valid(mset, "measurement set")
    status = condition_diff(mset)
    classification = classify(mset)

    caveats = [
        Note(
            code=NoteCode.BASELINE_UNAVAILABLE,
            severity=Severity.INFO,
            message=(
                "No baseline repeatability assessment is available (1-phase assessment), "
                "so variation due to differing conditions cannot be separated from "
                "baseline variation."
            ),
        )
    ]
    if classification == Classification.INDETERMINATE:
        caveats.append(_indeterminate_caveat(mset, status))

    overall = GroupScore(
        classification=classification,
        report=precision_report(mset.sample(), config.ci_level),
    )
    r_scores = [overall]
    if config.varied_condition_names:
        groups = group_by_varied_conditions(mset, config.varied_condition_names)
        group_scores, group_caveats = _score_groups(groups, config)
        r_scores.extend(group_scores)
        caveats.extend(group_caveats)

    logger.info(
        "1-phase assessment of %s/%s: n=%d classification=%s",
        mset.object_id,
        mset.measurand,
        mset.n,
        classification,
    )
    return AssessmentResult(
        mode=AssessmentMode.ONE_PHASE,
        object_id=mset.object_id,
        measurand=mset.measurand,
        unit=mset.unit,
        schema_name=mset.condition_schema.name,
        schema_version=mset.condition_schema.version,
        classification=classification,
        condition_status=status,
        r_scores=r_scores,
        caveats=caveats,
        provenance=_provenance(mset),
    )


def _baseline(repeat_sets: list[MeasurementSet], repro_set: MeasurementSet) -> MeasurementSet:
    if not repeat_sets:
        raise AssessmentError(ErrorCode.INVALID_SET, "the repeatability phase has no measurements")
    for index, repeat in enumerate(repeat_sets, start=1):
        _require_valid(repeat, f"repeat set {index}")
        if (repeat.object_id, repeat.measurand, repeat.unit) != (
            repro_set.object_id,
            repro_set.measurand,
            repro_set.unit,
        ):
            raise AssessmentError(
                ErrorCode.INVALID_SET,
                f"repeat set {index} measures {repeat.object_id}/{repeat.measurand} "
                f"[{repeat.unit}], not {repro_set.object_id}/{repro_set.measurand} "
                f"[{repro_set.unit}]",
            )
        if classify(repeat) != Classification.REPEATABILITY:
            raise AssessmentError(
                ErrorCode.NOT_REPEATABILITY,
                f"repeat set {index} is not under repeatability conditions of measurement",
            )

    pooled = repro_set.subset([m for repeat in repeat_sets for m in repeat.measurements])
    if classify(pooled) != Classification.REPEATABILITY:
        raise AssessmentError(
            ErrorCode.NOT_REPEATABILITY,
            "the repeat sets do not share the same condition values",
        )
    return pooled


def _effect(report: PrecisionReport, r0: PrecisionReport) -> float | None:
    if report.cv_star_percent is None or r0.cv_star_percent is None:
        return None
    return report.cv_star_percent - r0.cv_star_percent


def assess_two_phase(
    repeat_sets: list[MeasurementSet], repro_set: MeasurementSet, config: AssessmentConfig
) -> AssessmentResult:
    """Baseline repeatability phase followed by a reproducibility phase.

    R0 is the precision of the pooled repeat sets. Each combination of the
    varied condition values in ``repro_set`` (the whole set if none are
    named) gets an R score and an effect estimate against R0.

    Raises:
        AssessmentError: INVALID_SET, NOT_REPEATABILITY or UNKNOWN_CONDITION.
    """
    _require_valid(repro_set, "reproducibility set")
    baseline = _baseline(repeat_sets, repro_set)
    resolve_names(repro_set, config.varied_condition_names)

    r0 = precision_report(baseline.sample(), config.ci_level)
    status = condition_diff(repro_set)
    classification = classify(repro_set)
    caveats: list[Note] = []

    if config.target_precision is not None and (
        r0.cv_star_percent is None or r0.cv_star_percent > config.target_precision
    ):
        candidates = [
            spec.name
            for spec in repro_set.condition_schema.conditions
            if status[spec.key] != ConditionStatus.ALL_SAME
        ]
        baseline_cv = "undefined" if r0.cv_star_percent is None else f"{r0.cv_star_percent:g}"
        caveats.append(
            Note(
                code=NoteCode.BASELINE_NOT_CONVERGED,
                message=(
                    f"Baseline CV* {baseline_cv} exceeds the target precision "
                    f"{config.target_precision:g}; consider controlling additional conditions "
                    f"({', '.join(candidates) or 'none identified'}) and repeating the "
                    "repeatability phase."
                ),
                details=candidates,
            )
        )
    if classification == Classification.INDETERMINATE:
        caveats.append(_indeterminate_caveat(repro_set, status))

    if config.varied_condition_names:
        groups = group_by_varied_conditions(repro_set, config.varied_condition_names)
    else:
        groups = [ConditionGroupSet(combination={}, indeterminate=False, measurements=repro_set)]
    r_scores, group_caveats = _score_groups(groups, config)
    caveats.extend(group_caveats)

    effects = []
    for score in r_scores:
        if score.report.n != r0.n:
            caveats.append(
                Note(
                    code=NoteCode.UNEQUAL_N,
                    message=(
                        f"Group {combination_label(score.combination)} has sample size "
                        f"{score.report.n} but the baseline has {r0.n}; both phases should "
                        "use the same sample size."
                    ),
                    details=list(score.combination.values()),
                )
            )
        effects.append(
            EffectEstimate(combination=score.combination, cv_star_delta=_effect(score.report, r0))
        )

    logger.info(
        "2-phase assessment of %s/%s: baseline n=%d, %d R score(s)",
        repro_set.object_id,
        repro_set.measurand,
        r0.n,
        len(r_scores),
    )
    return AssessmentResult(
        mode=AssessmentMode.TWO_PHASE,
        object_id=repro_set.object_id,
        measurand=repro_set.measurand,
        unit=repro_set.unit,
        schema_name=repro_set.condition_schema.name,
        schema_version=repro_set.condition_schema.version,
        classification=classification,
        condition_status=status,
        r0=r0,
        r_scores=r_scores,
        effect_estimates=effects,
        caveats=caveats,
        provenance=_provenance(baseline) + _provenance(repro_set),
    )
