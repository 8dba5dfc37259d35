"""Example datasets and starter schemas shipped with the package."""

from __future__ import annotations

import logging
from importlib import resources
from pathlib import Path

from reprometer.errors import DatasetError, ErrorCode
from reprometer.measurement import bundled_schema_names, bundled_schema_text

logger = logging.getLogger(__name__)

DATA_PACKAGE = "reprometer.data"

# dataset name -> (CSV files, schema)
BUNDLED_DATASETS: dict[str, tuple[tuple[str, ...], str]] = {
    "torc": (("torc.csv",), "museum"),
    "wf1": (("wf1.csv",), "wf1"),
    "human-eval": (("clarity.csv", "fluency.csv"), "human-eval"),
}


def dataset_names() -> list[str]:
    return sorted(BUNDLED_DATASETS)


def dataset_text(filename: str) -> str:
    return (resources.files(DATA_PACKAGE) / "examples" / filename).read_text(encoding="utf-8")


def write_dataset(name: str, output_dir: str | Path) -> list[Path]:
    """Write the CSV file(s) and schema of a bundled dataset.

    Returns:
        Paths written, CSV files first.

    Raises:
        DatasetError: UNKNOWN_EXAMPLE for names that are not bundled.
    """
    if name not in BUNDLED_DATASETS:
        raise DatasetError(
            ErrorCode.UNKNOWN_EXAMPLE,
            f"unknown example {name!r}; available: {', '.join(dataset_names())}",
        )
    filenames, schema = BUNDLED_DATASETS[name]
    target = Path(output_dir)
    target.mkdir(parents=True, exist_ok=True)

    written = []
    for filename in filenames:
        path = target / filename
        path.write_text(dataset_text(filename), encoding="utf-8")
        written.append(path)
    written.append(write_schema(schema, target))
    logger.info("Wrote example %s to %s", name, target)
    return written


def write_schema(name: str, output_dir: str | Path) -> Path:
    """Write a bundled schema as ``<name>.schema.json``.

    Raises:
        DatasetError: UNKNOWN_EXAMPLE for unknown schema names.
    """
    text = bundled_schema_text(name)
    target = Path(output_dir)
    target.mkdir(parents=True, exist_ok=True)
    path = target / f"{name}.schema.json"
    path.write_text(text, encoding="utf-8")
    return path


def listing() -> str:
    lines = ["datasets:"]
    for name in dataset_names():
        filenames, schema = BUNDLED_DATASETS[name]
        lines.append(f"  {name}: {', '.join(filenames)} (schema {schema})")
    lines.append("schemas:")
    lines.extend(f"  {name}" for name in bundled_schema_names())
    return "\n".join(lines) + "\n"
