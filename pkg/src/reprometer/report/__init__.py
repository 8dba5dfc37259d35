"""Prose and JSON rendering of assessment results."""

from .formatting import fmt_number, round_decimal
from .structured import (
    ReportBundle,
    StructuredReport,
    build_bundle,
    parse_structured,
    render_structured,
)
from .text import render_paragraph, render_text

__all__ = [
    "ReportBundle",
    "StructuredReport",
    "build_bundle",
    "fmt_number",
    "parse_structured",
    "render_paragraph",
    "render_structured",
    "render_text",
    "round_decimal",
]
