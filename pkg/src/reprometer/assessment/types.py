"""Assessment configuration and result models."""

from __future__ import annotations

from enum import StrEnum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from reprometer import defaults
from reprometer.errors import Note
from reprometer.measurement import Classification, ConditionStatus
from reprometer.stats import PrecisionReport


class AssessmentMode(StrEnum):
    ONE_PHASE = "OnePhase"
    TWO_PHASE = "TwoPhase"


class AssessmentConfig(BaseModel):
    """Settings for one assessment run.

    ``varied_condition_names`` selects the conditions whose value combinations
    get their own R score; ``target_precision`` is the CV* level below which
    the repeatability baseline counts as converged.
    """

    model_config = ConfigDict(frozen=True)

    ci_level: float = defaults.DEFAULT_CI_LEVEL
    varied_condition_names: list[str] = Field(default_factory=list)
    target_precision: Optional[float] = None

    @field_validator("ci_level")
    @classmethod
    def _level_in_unit_interval(cls, value: float) -> float:
        if not 0.0 < value < 1.0:
            raise ValueError("ci_level must lie strictly between 0 and 1")
        return value


class GroupScore(BaseModel):
    """An R score for one combination of condition values."""

    model_config = ConfigDict(frozen=True)

    combination: dict[str, str] = Field(default_factory=dict)
    indeterminate: bool = False
    classification: Classification
    report: PrecisionReport


class EffectEstimate(BaseModel):
    """CV*(R) - CV*(R0) for one combination; None if either CV* is undefined."""

    model_config = ConfigDict(frozen=True)

    combination: dict[str, str] = Field(default_factory=dict)
    cv_star_delta: Optional[float]


class ProvenanceEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    date: Optional[str] = None
    team: str = "?"
    source: str = ""


class AssessmentResult(BaseModel):
    """Outcome of a 1-phase or 2-phase assessment."""

    model_config = ConfigDict(frozen=True)

    mode: AssessmentMode
    object_id: str
    measurand: str
    unit: str
    schema_name: str
    schema_version: str
    classification: Classification
    condition_status: dict[str, ConditionStatus] = Field(default_factory=dict)
    r0: Optional[PrecisionReport] = None
    r_scores: list[GroupScore] = Field(default_factory=list)
    effect_estimates: list[EffectEstimate] = Field(default_factory=list)
    caveats: list[Note] = Field(default_factory=list)
    provenance: list[ProvenanceEntry] = Field(default_factory=list)

    def all_notes(self) -> list[Note]:
        """Caveats followed by every report warning, duplicates removed."""
        notes: list[Note] = []
        reports = ([self.r0] if self.r0 else []) + [g.report for g in self.r_scores]
        for note in [*self.caveats, *(w for r in reports for w in r.warnings)]:
            if note not in notes:
                notes.append(note)
        return notes

    def sources(self) -> list[str]:
        """Distinct citation strings in order of first appearance."""
        seen: list[str] = []
        for entry in self.provenance:
            if entry.source and entry.source not in seen:
                seen.append(entry.source)
        return seen
