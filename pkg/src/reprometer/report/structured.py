"""Machine-readable (JSON) rendering of assessment results.

Field names are append-only across versions; ``format_version`` changes only
on incompatible layout changes.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from reprometer import defaults
from reprometer.assessment import AssessmentResult
from reprometer.config import ReportSettings
from reprometer.errors import DatasetError, ErrorCode

from .text import render_text


class StructuredReport(BaseModel):
    """Lossless document mirroring every result and precision field."""

    model_config = ConfigDict(frozen=True)

    format_version: str = defaults.STRUCTURED_FORMAT_VERSION
    tool_version: Optional[str] = None
    provenance: list[str] = Field(default_factory=list)
    result: AssessmentResult

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


class ReportBundle(BaseModel):
    model_config = ConfigDict(frozen=True)

    text: str
    structured: StructuredReport
    provenance: list[str] = Field(default_factory=list)


def render_structured(
    result: AssessmentResult,
    provenance: Optional[list[str]] = None,
    tool_version: Optional[str] = None,
) -> StructuredReport:
    """Wrap a result with provenance and version metadata.

    ``tool_version`` is left out (null) by default so identical inputs give
    byte-identical documents across releases.
    """
    return StructuredReport(
        tool_version=tool_version,
        provenance=list(provenance) if provenance is not None else result.sources(),
        result=result,
    )


def parse_structured(text: str) -> StructuredReport:
    """Parse a JSON document produced by ``render_structured``.

    Raises:
        DatasetError: BAD_VALUE if the document does not validate.
    """
    try:
        return StructuredReport.model_validate_json(text)
    except ValidationError as e:
        raise DatasetError(ErrorCode.BAD_VALUE, f"invalid structured report: {e}") from e


def build_bundle(
    result: AssessmentResult,
    provenance: Optional[list[str]] = None,
    settings: Optional[ReportSettings] = None,
    tool_version: Optional[str] = None,
) -> ReportBundle:
    sources = list(provenance) if provenance is not None else result.sources()
    return ReportBundle(
        text=render_text(result, sources, settings),
        structured=render_structured(result, sources, tool_version),
        provenance=sources,
    )
