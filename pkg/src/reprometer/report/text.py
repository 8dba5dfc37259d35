"""Prose rendering of assessment results.

The paragraph fronts CV* as the headline figure, then gives mean, unbiased
standard deviation with its confidence interval, sample size and the share
of values within one and two standard deviations.
"""

from __future__ import annotations

from typing import Optional

from reprometer.assessment import AssessmentMode, AssessmentResult
from reprometer.assessment.grouping import combination_label
from reprometer.config import ReportSettings
from reprometer.measurement import Classification
from reprometer.stats import PrecisionReport

from .formatting import count_words, fmt_level, fmt_number, fmt_signed, value_decimals


def _title(measurand: str) -> str:
    # "mass" -> "Mass", but "wF1" stays as written
    if measurand[:2].islower():
        return measurand[0].upper() + measurand[1:]
    return measurand


def _join(items: list[str]) -> str:
    if len(items) <= 1:
        return "".join(items)
    return f"{', '.join(items[:-1])} and {items[-1]}"


def _within_sentence(report: PrecisionReport, settings: ReportSettings) -> str:
    one = report.within_1sd_percent
    two = report.within_2sd_percent
    if one >= 100.0:
        return "All measured values fall within one standard deviation."
    one_text = fmt_number(one, settings.percent_decimals)
    if two >= 100.0:
        return (
            f"All measured values fall within two standard deviations, {one_text}% within "
            "one standard deviation."
        )
    two_text = fmt_number(two, settings.percent_decimals)
    return (
        f"{two_text}% of measured values fall within two standard deviations, {one_text}% "
        "within one standard deviation."
    )


def render_paragraph(
    result: AssessmentResult,
    report: PrecisionReport,
    classification: Classification,
    sources: list[str],
    settings: ReportSettings,
) -> str:
    """One summary paragraph for a single precision report."""
    kind = "repeatability" if classification == Classification.REPEATABILITY else "reproducibility"
    places = value_decimals(report, settings)
    if report.cv_star_percent is None:
        headline = "the unbiased coefficient of variation is undefined"
    else:
        headline = (
            "the unbiased coefficient of variation is "
            f"**{fmt_number(report.cv_star_percent, settings.cv_star_decimals)}**"
        )
    reported = f" reported by {_join(sources)}" if sources else ""
    ci = (
        f"({fmt_number(report.ci_low, settings.ci_decimals)}, "
        f"{fmt_number(report.ci_high, settings.ci_decimals)})"
    )
    return (
        f"{_title(result.measurand)} measurement {kind} under {kind} conditions of measurement "
        f"was assessed on the basis of {count_words(report.n)} measurements of "
        f"{result.object_id}{reported} as follows: {headline}, for a mean of "
        f"{fmt_number(report.mean, places)}, unbiased sample standard deviation of "
        f"{fmt_number(report.unbiased_stddev_sstar, places)} with "
        f"{fmt_level(report.ci_level)}% CI {ci}, and sample size {report.n}. "
        f"{_within_sentence(report, settings)}"
    )


def render_text(
    result: AssessmentResult,
    provenance: Optional[list[str]] = None,
    settings: Optional[ReportSettings] = None,
) -> str:
    """Render an assessment result as prose.

    Args:
        result: Completed assessment.
        provenance: Citation strings; defaults to the sources recorded in
            the result.
        settings: Rounding settings; defaults to ``ReportSettings()``.

    Returns:
        Newline-terminated text: paragraphs separated by blank lines,
        followed by a caveat list when there are any.
    """
    settings = settings or ReportSettings()
    sources = list(provenance) if provenance is not None else result.sources()
    blocks: list[str] = []

    if result.mode == AssessmentMode.ONE_PHASE:
        overall, *groups = result.r_scores
        blocks.append(
            render_paragraph(result, overall.report, overall.classification, sources, settings)
        )
        for group in groups:
            blocks.append(
                f"Scores for {combination_label(group.combination)}:\n"
                + render_paragraph(result, group.report, group.classification, [], settings)
            )
    else:
        assert result.r0 is not None
        blocks.append(
            "Baseline repeatability (R0):\n"
            + render_paragraph(
                result, result.r0, Classification.REPEATABILITY, [], settings
            )
        )
        for group, effect in zip(result.r_scores, result.effect_estimates):
            block = f"Reproducibility for {combination_label(group.combination)}:\n" + (
                render_paragraph(result, group.report, group.classification, [], settings)
            )
            if effect.cv_star_delta is not None:
                block += (
                    "\nEffect of varying the conditions: CV* "
                    f"{fmt_signed(effect.cv_star_delta, settings.cv_star_decimals)} "
                    "relative to the baseline."
                )
            blocks.append(block)
        if sources:
            blocks.append(f"Measurements reported by {_join(sources)}.")

    notes = result.all_notes()
    if notes:
        blocks.append("Caveats:\n" + "\n".join(f"- {note.message}" for note in notes))
    return "\n\n".join(blocks) + "\n"
