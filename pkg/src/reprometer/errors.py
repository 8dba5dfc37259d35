"""Error and finding types shared across reprometer.

Hard failures are raised as ``ReprometerError`` subclasses carrying a stable
``ErrorCode``. Non-fatal findings (small samples, degenerate intervals,
missing baselines) are returned as ``Note`` records so they can travel with
the results into reports.
"""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field


class ErrorCode(StrEnum):
    """Machine-readable error codes."""

    # stats
    EMPTY_SAMPLE = "EMPTY_SAMPLE"
    INSUFFICIENT_SAMPLE = "INSUFFICIENT_SAMPLE"
    ZERO_DISPERSION = "ZERO_DISPERSION"
    BAD_PROBABILITY = "BAD_PROBABILITY"
    NONPOSITIVE_MEAN = "NONPOSITIVE_MEAN"
    NON_FINITE_VALUE = "NON_FINITE_VALUE"
    # measurement
    OUT_OF_SCALE = "OUT_OF_SCALE"
    BAD_SCALE = "BAD_SCALE"
    # assessment
    INVALID_SET = "INVALID_SET"
    NOT_REPEATABILITY = "NOT_REPEATABILITY"
    UNKNOWN_CONDITION = "UNKNOWN_CONDITION"
    # datasets / cli
    UNREADABLE = "UNREADABLE"
    MISSING_COLUMN = "MISSING_COLUMN"
    BAD_VALUE = "BAD_VALUE"
    BAD_DATE = "BAD_DATE"
    BAD_COLUMN = "BAD_COLUMN"
    BAD_SCHEMA = "BAD_SCHEMA"
    UNKNOWN_EXAMPLE = "UNKNOWN_EXAMPLE"
    BAD_CONFIG = "BAD_CONFIG"


class ReprometerError(Exception):
    """Base class for all reprometer errors."""

    def __init__(self, code: ErrorCode, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class StatsError(ReprometerError):
    """Raised by precision estimators on inputs outside their domain."""


class MeasurementError(ReprometerError):
    """Raised by measurement-model transformations."""


class AssessmentError(ReprometerError):
    """Raised when an assessment cannot be carried out."""

    def __init__(self, code: ErrorCode, message: str, violations: list | None = None):
        super().__init__(code, message)
        self.violations = list(violations or [])


class DatasetError(ReprometerError):
    """Raised when a dataset or schema file cannot be ingested."""

    def __init__(self, code: ErrorCode, message: str, row: int | None = None):
        super().__init__(code, message if row is None else f"row {row}: {message}")
        self.row = row


class ConfigError(ReprometerError):
    """Raised for unreadable or invalid configuration files."""


class Severity(StrEnum):
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"


class NoteCode(StrEnum):
    """Codes for non-fatal findings attached to reports and results."""

    SAMPLE_TOO_SMALL = "SAMPLE_TOO_SMALL"
    ZERO_DISPERSION = "ZERO_DISPERSION"
    NEGATIVE_CI_LOWER = "NEGATIVE_CI_LOWER"
    NONPOSITIVE_MEAN = "NONPOSITIVE_MEAN"
    BASELINE_UNAVAILABLE = "BASELINE_UNAVAILABLE"
    BASELINE_NOT_CONVERGED = "BASELINE_NOT_CONVERGED"
    INDETERMINATE_CONDITIONS = "INDETERMINATE_CONDITIONS"
    INDETERMINATE_GROUP = "INDETERMINATE_GROUP"
    SINGLETON_GROUP = "SINGLETON_GROUP"
    UNEQUAL_N = "UNEQUAL_N"


class Note(BaseModel):
    """A tagged, non-fatal finding."""

    model_config = ConfigDict(frozen=True)

    code: NoteCode
    severity: Severity = Severity.WARNING
    message: str
    details: list[str] = Field(default_factory=list)


def has_errors(notes: list[Note]) -> bool:
    """Return True if any note is error-level."""
    return any(note.severity == Severity.ERROR for note in notes)
