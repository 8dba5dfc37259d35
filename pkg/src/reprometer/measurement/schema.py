"""Condition schemas: the named conditions a measurement set is described by.

Schemas are JSON documents. Starter schemas derived from published
reproducibility checklists ship with the package under ``data/schemas``.
"""

from __future__ import annotations

import logging
from enum import StrEnum
from importlib import resources
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from reprometer.errors import DatasetError, ErrorCode

logger = logging.getLogger(__name__)

SCHEMA_PACKAGE = "reprometer.data"


class ConditionGroup(StrEnum):
    """Object (C^O), measurement-method (C^N) and measurement-procedure (C^P) conditions."""

    OBJECT = "O"
    METHOD = "N"
    PROCEDURE = "P"


class ConditionSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    group: ConditionGroup
    description: str = ""

    @property
    def key(self) -> str:
        return f"{self.group}:{self.name}"


class ConditionSchema(BaseModel):
    """Named, versioned list of conditions of measurement."""

    model_config = ConfigDict(frozen=True, extra="ignore")

    name: str
    version: str = "1"
    description: str = ""
    conditions: list[ConditionSpec] = Field(default_factory=list)

    @model_validator(mode="after")
    def _unique_names(self) -> ConditionSchema:
        names = [c.name for c in self.conditions]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"duplicate condition names: {', '.join(duplicates)}")
        return self

    def names(self) -> list[str]:
        return [c.name for c in self.conditions]

    def find(self, name: str) -> ConditionSpec | None:
        """Look up a condition by bare name or by ``G:name`` key."""
        for spec in self.conditions:
            if name in (spec.name, spec.key):
                return spec
        return None


def parse_schema(text: str, origin: str = "<string>") -> ConditionSchema:
    try:
        return ConditionSchema.model_validate_json(text)
    except ValidationError as e:
        raise DatasetError(ErrorCode.BAD_SCHEMA, f"invalid schema {origin}: {e}") from e


def load_schema(path: str | Path) -> ConditionSchema:
    """Load a schema file.

    Raises:
        DatasetError: UNREADABLE or BAD_SCHEMA.
    """
    schema_path = Path(path)
    try:
        text = schema_path.read_text(encoding="utf-8")
    except OSError as e:
        raise DatasetError(ErrorCode.UNREADABLE, f"cannot read {schema_path}: {e}") from e
    schema = parse_schema(text, str(schema_path))
    logger.info("Loaded schema %s v%s from %s", schema.name, schema.version, schema_path)
    return schema


def bundled_schema_names() -> list[str]:
    folder = resources.files(SCHEMA_PACKAGE) / "schemas"
    return sorted(
        entry.name.removesuffix(".schema.json")
        for entry in folder.iterdir()
        if entry.name.endswith(".schema.json")
    )


def bundled_schema_text(name: str) -> str:
    """Raw JSON text of a bundled schema.

    Raises:
        DatasetError: UNKNOWN_EXAMPLE if no such schema ships with the package.
    """
    if name not in bundled_schema_names():
        raise DatasetError(
            ErrorCode.UNKNOWN_EXAMPLE,
            f"unknown schema {name!r}; available: {', '.join(bundled_schema_names())}",
        )
    entry = resources.files(SCHEMA_PACKAGE) / "schemas" / f"{name}.schema.json"
    return entry.read_text(encoding="utf-8")


def bundled_schema(name: str) -> ConditionSchema:
    return parse_schema(bundled_schema_text(name), f"bundled:{name}")
