"""1-phase and 2-phase reproducibility assessment procedures."""

from .engine import assess_one_phase, assess_two_phase
from .grouping import PROVENANCE_NAMES, ConditionGroupSet, group_by_varied_conditions
from .types import (
    AssessmentConfig,
    AssessmentMode,
    AssessmentResult,
    EffectEstimate,
    GroupScore,
    ProvenanceEntry,
)

__all__ = [
    "PROVENANCE_NAMES",
    "AssessmentConfig",
    "AssessmentMode",
    "AssessmentResult",
    "ConditionGroupSet",
    "EffectEstimate",
    "GroupScore",
    "ProvenanceEntry",
    "assess_one_phase",
    "assess_two_phase",
    "group_by_varied_conditions",
]
