"""Command-line interface for reprometer.

Usage:
    reprometer validate DATA.csv [--schema SCHEMA.json]
    reprometer assess DATA.csv [--mode one|two] [--vary NAME,...] [--rescale MIN..MAX]
    reprometer examples NAME [--output-dir DIR]

Reports go to stdout; logs and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path
from typing import Optional

import structlog

from reprometer import __version__, defaults
from reprometer.assessment import AssessmentConfig, assess_one_phase, assess_two_phase
from reprometer.config import ReprometerConfig, load_config
from reprometer.errors import AssessmentError, ReprometerError, has_errors
from reprometer.measurement import MeasurementSet, load_schema, rescale_to_zero, validate_set
from reprometer.report import render_structured, render_text

from .bundled import listing, write_dataset, write_schema
from .datasets import load_dataset

__all__ = ["build_parser", "configure_logging", "main"]

log = structlog.get_logger(__name__)

_SCALE_RE = re.compile(r"^\s*(-?\d+(?:\.\d+)?)\s*\.\.\s*(-?\d+(?:\.\d+)?)\s*$")
_VERBOSITY = {0: "WARNING", 1: "INFO"}


def configure_logging(level: str) -> None:
    """Send stdlib and structlog output to stderr; stdout is reserved for reports."""
    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setFormatter(logging.Formatter("%(levelname)-8s [%(name)s] %(message)s"))
    root_logger.addHandler(stderr_handler)
    root_logger.setLevel(level)

    # no timestamps: identical runs must produce identical output
    structlog.configure(
        processors=[
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"must lie strictly between 0 and 1, got {text}")
    return value


def _scale(text: str) -> tuple[float, float]:
    match = _SCALE_RE.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected MIN..MAX, got {text!r}")
    return float(match.group(1)), float(match.group(2))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-c", "--config", type=Path, help="YAML config file")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="More logging (-v info, -vv debug)"
    )

    parser = argparse.ArgumentParser(
        prog="reprometer",
        description="Assess the reproducibility of measurements with the unbiased CV (CV*)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser(
        "validate", parents=[common], help="Check measurement files for assessment"
    )
    validate.add_argument("paths", nargs="+", type=Path, help="Measurement CSV file(s)")
    validate.add_argument("--schema", type=Path, help="Condition schema JSON file")

    assess = commands.add_parser("assess", parents=[common], help="Run an assessment")
    assess.add_argument("path", type=Path, help="Measurement CSV file")
    assess.add_argument("--mode", choices=["one", "two"], help="1-phase or 2-phase assessment")
    assess.add_argument("--level", type=_probability, help="Confidence level of the CI")
    assess.add_argument(
        "--vary",
        action="append",
        default=[],
        metavar="NAMES",
        help="Comma-separated conditions to score per value combination",
    )
    assess.add_argument("--rescale", type=_scale, metavar="MIN..MAX", help="Shift scale to 0")
    assess.add_argument("--format", choices=["text", "json"], help="Report format")
    assess.add_argument(
        "--repeat",
        action="append",
        default=[],
        type=Path,
        metavar="CSV",
        help="Repeatability-phase measurements (2-phase mode, repeatable)",
    )
    assess.add_argument("--schema", type=Path, help="Condition schema JSON file")
    assess.add_argument(
        "--target-precision", type=float, help="Baseline CV* the repeatability phase should reach"
    )
    assess.add_argument(
        "--show-version", action="store_true", help="Include the tool version in JSON output"
    )

    examples = commands.add_parser(
        "examples", parents=[common], help="Write bundled example datasets or starter schemas"
    )
    examples.add_argument("name", nargs="?", help="Dataset name (torc, wf1, human-eval)")
    examples.add_argument("--output-dir", type=Path, default=Path("."), help="Target directory")
    examples.add_argument("--list", action="store_true", help="List datasets and schemas")
    examples.add_argument("--schema", metavar="NAME", help="Write a bundled schema")
    return parser


def _load(
    path: Path, schema_path: Optional[Path], scale: Optional[tuple[float, float]]
) -> MeasurementSet:
    schema = load_schema(schema_path) if schema_path else None
    mset = load_dataset(path, schema)
    if scale is not None:
        mset = rescale_to_zero(mset, *scale)
    return mset


def cmd_validate(args: argparse.Namespace, config: ReprometerConfig) -> int:
    status = defaults.EXIT_OK
    for path in args.paths:
        mset = _load(path, args.schema, None)
        violations = validate_set(mset)
        for violation in violations:
            print(f"{path}: {violation}")
        if violations:
            status = defaults.EXIT_FINDINGS
        else:
            print(f"{path}: {mset.n} measurements, no violations")
        log.info("validated", path=str(path), violations=len(violations))
    return status


def cmd_assess(args: argparse.Namespace, config: ReprometerConfig) -> int:
    mode = args.mode or config.assessment.mode
    output = args.format or config.report.format
    if mode == "two" and not args.repeat:
        print("error: --mode two needs at least one --repeat file", file=sys.stderr)
        return defaults.EXIT_USAGE
    if mode == "one" and args.repeat:
        print("error: --repeat is only used with --mode two", file=sys.stderr)
        return defaults.EXIT_USAGE

    assessment = AssessmentConfig(
        ci_level=args.level if args.level is not None else config.assessment.ci_level,
        varied_condition_names=[
            name.strip() for item in args.vary for name in item.split(",") if name.strip()
        ],
        target_precision=(
            args.target_precision
            if args.target_precision is not None
            else config.assessment.target_precision
        ),
    )
    repro = _load(args.path, args.schema, args.rescale)
    if mode == "two":
        repeats: list[MeasurementSet] = [
            _load(path, args.schema, args.rescale) for path in args.repeat
        ]
        result = assess_two_phase(repeats, repro, assessment)
    else:
        result = assess_one_phase(repro, assessment)

    if output == "json":
        tool_version = __version__ if args.show_version else None
        sys.stdout.write(render_structured(result, tool_version=tool_version).to_json())
    else:
        sys.stdout.write(render_text(result, settings=config.report))

    log.info("assessed", path=str(args.path), mode=mode, scores=len(result.r_scores))
    return defaults.EXIT_FINDINGS if has_errors(result.all_notes()) else defaults.EXIT_OK


def cmd_examples(args: argparse.Namespace, config: ReprometerConfig) -> int:
    if args.list:
        sys.stdout.write(listing())
        return defaults.EXIT_OK
    if args.schema:
        print(write_schema(args.schema, args.output_dir))
        return defaults.EXIT_OK
    if not args.name:
        print("error: name a dataset, or use --list or --schema", file=sys.stderr)
        return defaults.EXIT_USAGE
    for path in write_dataset(args.name, args.output_dir):
        print(path)
    return defaults.EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "assess": cmd_assess,
    "examples": cmd_examples,
}


def main(argv: Optional[list[str]] = None) -> int:
    """CLI entrypoint for reprometer. Returns the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
    except ReprometerError as e:
        configure_logging("WARNING")
        print(f"error: {e}", file=sys.stderr)
        return defaults.EXIT_USAGE

    level = _VERBOSITY.get(args.verbose, "DEBUG") if args.verbose else config.logging.level
    configure_logging(level)

    try:
        return COMMANDS[args.command](args, config)
    except AssessmentError as e:
        print(f"error: {e}", file=sys.stderr)
        for violation in e.violations:
            print(f"  {violation}", file=sys.stderr)
        return defaults.EXIT_USAGE
    except ReprometerError as e:
        print(f"error: {e}", file=sys.stderr)
        return defaults.EXIT_USAGE
